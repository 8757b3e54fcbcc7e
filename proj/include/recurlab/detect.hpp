#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "recurlab/metric.hpp"

// =====================================================================
// Finite-dimensional recurrence detectors.
//
// recurrence_search scans ||T^n x - x|| and keeps the strictly improving
// residual subsequence; uniform_rigidity_search does the same for the
// operator distance ||T^n - I||. Operator norms are exact for diagonal
// and normal matrices (spectral calculus) and otherwise come from power
// iteration on B*B (30 iterations, tolerance 1e-10).
//
// neumann_inverse_check verifies the series bound: once ||I - T^n|| < 1/2
// the inverse power satisfies ||I - (T^n)^{-1}|| <= 2 ||I - T^n||.
//
// kronecker_search finds the first n with max_j |lambda_j^n - 1| < eps
// for unimodular inputs, the simultaneous-return problem behind every
// diagonal certificate here.
// =====================================================================

namespace recurlab::detect {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class NormKind { euclidean_weighted, sup, product_metric };

struct NormSpec {
    NormKind kind = NormKind::euclidean_weighted;
    std::vector<double> weights;  // empty = unweighted euclidean
    int metric_terms = 64;        // product metric truncation
};

inline double vector_residual(const Vector& y, const Vector& x, const NormSpec& spec) {
    if (y.size() != x.size()) throw std::invalid_argument("residual: size mismatch");
    switch (spec.kind) {
        case NormKind::euclidean_weighted: {
            double s = 0.0;
            for (Eigen::Index i = 0; i < y.size(); ++i) {
                const double w = spec.weights.empty()
                                     ? 1.0
                                     : spec.weights.at(static_cast<std::size_t>(i));
                s += std::norm(y[i] - x[i]) * w * w;
            }
            return std::sqrt(s);
        }
        case NormKind::sup: {
            double s = 0.0;
            for (Eigen::Index i = 0; i < y.size(); ++i)
                s = std::max(s, std::abs(y[i] - x[i]));
            return s;
        }
        case NormKind::product_metric: {
            std::vector<cplx> a(y.data(), y.data() + y.size());
            std::vector<cplx> b(x.data(), x.data() + x.size());
            return product_metric(a, b, spec.metric_terms).hi;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------
// operator norm
// ---------------------------------------------------------------------

inline bool is_diagonal(const Matrix& A, double tol = 1e-14) {
    const double scale = A.cwiseAbs().maxCoeff() + 1.0;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (i != j && std::abs(A(i, j)) > tol * scale) return false;
    return true;
}

inline bool is_normal(const Matrix& A, double tol = 1e-12) {
    const Matrix lhs = A * A.adjoint();
    const Matrix rhs = A.adjoint() * A;
    const double scale = lhs.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff() + 1.0;
    return (lhs - rhs).cwiseAbs().maxCoeff() <= tol * scale;
}

inline double operator_norm(const Matrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("operator_norm: square input only");
    if (A.rows() == 0) return 0.0;
    if (is_diagonal(A)) {
        double m = 0.0;
        for (Eigen::Index i = 0; i < A.rows(); ++i) m = std::max(m, std::abs(A(i, i)));
        return m;
    }
    if (is_normal(A)) {
        Eigen::ComplexEigenSolver<Matrix> es(A, false);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    // power iteration on A*A, fixed budget of 30 sweeps, tolerance 1e-10
    const Matrix G = A.adjoint() * A;
    Vector v = Vector::Ones(A.rows());
    v.normalize();
    double lam = 0.0;
    for (int it = 0; it < 30; ++it) {
        Vector w = G * v;
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;
        w /= nw;
        const double est = std::real(w.dot(G * w));
        if (it > 0 && std::abs(est - lam) <= 1e-10 * std::max(1.0, est)) {
            lam = est;
            break;
        }
        lam = est;
        v = w;
    }
    return std::sqrt(std::max(lam, 0.0));
}

// ---------------------------------------------------------------------
// searches
// ---------------------------------------------------------------------

struct RecurrenceCertificate {
    bool found = false;
    long long n = 0;            // first success, if any
    double residual = 0.0;      // residual at n
    std::vector<long long> improving_ns;     // strictly improving subsequence
    std::vector<double> improving_residuals; // matching residuals (decreasing)
    double min_residual = std::numeric_limits<double>::infinity();
    long long argmin = 0;
    NormKind norm = NormKind::euclidean_weighted;
};

inline RecurrenceCertificate recurrence_search(const Matrix& T, const Vector& x,
                                               long long horizon, double tol,
                                               const NormSpec& spec = {}) {
    if (T.rows() != T.cols() || T.cols() != x.size())
        throw std::invalid_argument("recurrence_search: shape mismatch");
    if (horizon < 1 || !(tol > 0.0))
        throw std::invalid_argument("recurrence_search: bad horizon/tolerance");
    RecurrenceCertificate cert;
    cert.norm = spec.kind;
    Vector y = x;
    for (long long n = 1; n <= horizon; ++n) {
        y = T * y;
        const double res = vector_residual(y, x, spec);
        if (res < cert.min_residual) {
            cert.min_residual = res;
            cert.argmin = n;
            cert.improving_ns.push_back(n);
            cert.improving_residuals.push_back(res);
        }
        if (res <= tol) {
            cert.found = true;
            cert.n = n;
            cert.residual = res;
            break;
        }
    }
    return cert;
}

struct RigidityCertificate {
    bool found = false;
    long long n = 0;
    double distance = 0.0;  // ||T^n - I|| at n
    double min_distance = std::numeric_limits<double>::infinity();
    long long argmin = 0;
};

inline RigidityCertificate uniform_rigidity_search(const Matrix& T, long long horizon,
                                                   double tol) {
    if (T.rows() != T.cols()) throw std::invalid_argument("rigidity: square input only");
    if (horizon < 1 || !(tol > 0.0)) throw std::invalid_argument("rigidity: bad inputs");
    RigidityCertificate cert;
    const Matrix I = Matrix::Identity(T.rows(), T.cols());
    Matrix P = I;
    for (long long n = 1; n <= horizon; ++n) {
        P = P * T;
        const double dist = operator_norm(P - I);
        if (dist < cert.min_distance) {
            cert.min_distance = dist;
            cert.argmin = n;
        }
        if (dist <= tol) {
            cert.found = true;
            cert.n = n;
            cert.distance = dist;
            break;
        }
    }
    return cert;
}

// ---------------------------------------------------------------------
// inverse bound via the series I + (I - S) + (I - S)^2 + ... for S = T^n
// ---------------------------------------------------------------------

struct NeumannCheck {
    double forward = 0.0;   // ||I - T^n||
    double inverse = 0.0;   // ||I - (T^n)^{-1}||
    double bound = 0.0;     // 2 ||I - T^n||
    double slack = 0.0;     // bound - inverse, >= 0 under the hypothesis
};

inline Matrix matrix_power(const Matrix& T, long long n) {
    if (n < 0) throw std::invalid_argument("matrix_power: n must be >= 0");
    Matrix acc = Matrix::Identity(T.rows(), T.cols());
    Matrix base = T;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

inline NeumannCheck neumann_inverse_check(const Matrix& T, long long n) {
    if (T.rows() != T.cols()) throw std::invalid_argument("neumann: square input only");
    if (n < 1) throw std::invalid_argument("neumann: n must be >= 1");
    const Matrix I = Matrix::Identity(T.rows(), T.cols());
    const Matrix S = matrix_power(T, n);
    NeumannCheck chk;
    chk.forward = operator_norm(I - S);
    if (!(chk.forward < 0.5))
        throw std::domain_error("neumann_inverse_check: ||I - T^n|| < 1/2 hypothesis violated");
    const Matrix Sinv = S.partialPivLu().solve(I);
    chk.inverse = operator_norm(I - Sinv);
    chk.bound = 2.0 * chk.forward;
    chk.slack = chk.bound - chk.inverse;
    return chk;
}

// ---------------------------------------------------------------------
// power boundedness with an overflow guard
// ---------------------------------------------------------------------

struct PowerBound {
    double sup = 0.0;
    long long arg_sup = 0;
    bool diverged = false;   // tripped the 1e12 guard before the horizon
    long long stopped_at = 0;
};

inline PowerBound power_bound(const Matrix& T, long long horizon) {
    if (T.rows() != T.cols()) throw std::invalid_argument("power_bound: square input only");
    if (horizon < 1) throw std::invalid_argument("power_bound: horizon must be >= 1");
    PowerBound pb;
    Matrix P = Matrix::Identity(T.rows(), T.cols());
    for (long long n = 1; n <= horizon; ++n) {
        P = P * T;
        const double nn = operator_norm(P);
        if (nn > pb.sup) {
            pb.sup = nn;
            pb.arg_sup = n;
        }
        pb.stopped_at = n;
        if (nn > 1e12) {
            pb.diverged = true;
            break;
        }
    }
    return pb;
}

// ---------------------------------------------------------------------
// simultaneous unimodular returns
// ---------------------------------------------------------------------

struct KroneckerResult {
    bool found = false;
    long long n = 0;
    double residual = 0.0;  // max_j |lambda_j^n - 1| at n
    double min_residual = std::numeric_limits<double>::infinity();
    long long argmin = 0;
};

inline KroneckerResult kronecker_search(const std::vector<cplx>& lambdas, double eps,
                                        long long horizon) {
    if (lambdas.empty()) throw std::invalid_argument("kronecker_search: empty input");
    for (const cplx& l : lambdas)
        if (std::abs(std::abs(l) - 1.0) > 1e-12)
            throw std::invalid_argument("kronecker_search: non-unimodular value");
    if (!(eps > 0.0) || horizon < 1)
        throw std::invalid_argument("kronecker_search: bad eps/horizon");
    KroneckerResult out;
    std::vector<cplx> pow(lambdas.size(), cplx{1.0, 0.0});
    for (long long n = 1; n <= horizon; ++n) {
        double res = 0.0;
        for (std::size_t j = 0; j < pow.size(); ++j) {
            pow[j] *= lambdas[j];
            res = std::max(res, std::abs(pow[j] - 1.0));
        }
        if ((n & 0xFFF) == 0)  // damp modulus drift on long scans
            for (cplx& p : pow) p /= std::abs(p);
        if (res < out.min_residual) {
            out.min_residual = res;
            out.argmin = n;
        }
        if (res < eps) {
            out.found = true;
            out.n = n;
            out.residual = res;
            return out;
        }
    }
    return out;
}

}  // namespace recurlab::detect
