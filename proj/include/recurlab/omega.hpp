#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "recurlab/detect.hpp"
#include "recurlab/metric.hpp"
#include "recurlab/util.hpp"

// =====================================================================
// Operators on the space of all sequences, handled through row-finite
// matrices: each row carries finitely many nonzero entries, so the
// action on a coordinate only reads finitely many inputs and decisions
// about a lower-triangular operator restricted to the leading window
// are exact, not truncations.
//
// Main pieces: the upper-staircase support test, eigenvector assembly
// by forward substitution (with a non-diagonalizability witness when a
// repeated diagonal entry makes the system inconsistent: the Jordan
// coupling w then forces ||A^m f - f|| >= m |w|), diagonalization
// A = B D B^{-1} with unit lower-triangular B, the block power formula
//     T^n = [ H^n, 0 ; sum_{j<n} C^j B H^{n-1-j}, C^n ],
// and a recurrence decision that reduces to simultaneous unimodular
// returns of the diagonal.
// =====================================================================

namespace recurlab::omega {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDiagGapTol = 1e-9;  // repeated-eigenvalue threshold

struct RowFiniteMatrix {
    // rows[i] holds (column, value) pairs sorted by column; rows beyond the
    // materialized prefix are implicitly unknown and must not be touched.
    std::vector<std::vector<std::pair<long long, cplx>>> rows;

    long long materialized_rows() const { return static_cast<long long>(rows.size()); }

    static RowFiniteMatrix from_entries(
        long long nrows, const std::vector<std::tuple<long long, long long, cplx>>& entries) {
        if (nrows < 1) throw std::invalid_argument("from_entries: need at least one row");
        RowFiniteMatrix A;
        A.rows.resize(static_cast<std::size_t>(nrows));
        for (const auto& [i, j, v] : entries) {
            if (i < 0 || j < 0 || i >= nrows)
                throw std::invalid_argument("from_entries: index out of range");
            A.rows[static_cast<std::size_t>(i)].emplace_back(j, v);
        }
        for (auto& r : A.rows)
            std::sort(r.begin(), r.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        return A;
    }

    cplx at(long long i, long long j) const {
        const auto& r = rows.at(static_cast<std::size_t>(i));
        for (const auto& [col, v] : r)
            if (col == j) return v;
        return {0.0, 0.0};
    }

    // dense leading window; requires the window rows to be materialized and to
    // have no support beyond the window unless `allow_outside` is set
    Matrix window(long long N, bool allow_outside = false) const {
        if (N < 1 || N > materialized_rows())
            throw std::invalid_argument("window: need 1 <= N <= materialized rows");
        Matrix W = Matrix::Zero(N, N);
        for (long long i = 0; i < N; ++i)
            for (const auto& [j, v] : rows[static_cast<std::size_t>(i)]) {
                if (j >= N) {
                    if (!allow_outside)
                        throw std::domain_error("window: row support escapes the window");
                    continue;
                }
                W(i, j) = v;
            }
        return W;
    }

    bool lower_triangular_window(long long N) const {
        for (long long i = 0; i < std::min(N, materialized_rows()); ++i)
            for (const auto& [j, v] : rows[static_cast<std::size_t>(i)])
                if (j > i && v != cplx{0.0, 0.0}) return false;
        return true;
    }
};

// d(x, y) of the product topology; see metric.hpp for the enclosure contract.
using recurlab::MetricEnclosure;
using recurlab::product_metric;

// ---------------------------------------------------------------------
// upper staircase support shape
// ---------------------------------------------------------------------

struct StaircaseReport {
    bool is_staircase = false;
    std::vector<long long> last_columns;  // n_i per materialized row
    std::string reason;
};

inline StaircaseReport staircase_check(const RowFiniteMatrix& A) {
    StaircaseReport rep;
    long long prev = -1;
    for (long long i = 0; i < A.materialized_rows(); ++i) {
        const auto& r = A.rows[static_cast<std::size_t>(i)];
        long long last = -1;
        for (const auto& [j, v] : r)
            if (v != cplx{0.0, 0.0}) last = std::max(last, j);
        if (last < 0) throw std::domain_error("staircase_check: zero row");
        rep.last_columns.push_back(last);
        if (last <= prev) {
            rep.reason = "last nonzero columns not strictly increasing";
            return rep;
        }
        if (last <= i) {
            rep.reason = "row " + std::to_string(i) + " has no support above the diagonal";
            return rep;
        }
        prev = last;
    }
    rep.is_staircase = true;
    return rep;
}

// ---------------------------------------------------------------------
// eigenvectors of lower-triangular windows by forward substitution
// ---------------------------------------------------------------------

struct NonDiagonalizableWitness {
    long long row = 0;   // row where the system became inconsistent
    cplx w{0.0, 0.0};    // residual coupling; Jordan growth is m |w|
};

struct EigenvectorResult {
    Vector v;  // supported on indices >= k, v[k] = 1
    std::optional<NonDiagonalizableWitness> witness;
};

// Solve A v = a_kk v inside the window. When a later diagonal entry collides
// with a_kk, the forced choice is x_j = 0; if the accumulated row sum is
// nonzero there, the system is inconsistent and that residual is the witness.
inline EigenvectorResult eigenvector_construct(const Matrix& A, long long k) {
    const long long N = A.rows();
    if (A.cols() != N) throw std::invalid_argument("eigenvector_construct: square input");
    if (k < 0 || k >= N) throw std::invalid_argument("eigenvector_construct: bad index");
    for (long long i = 0; i < N; ++i)
        for (long long j = i + 1; j < N; ++j)
            if (A(i, j) != cplx{0.0, 0.0})
                throw std::invalid_argument("eigenvector_construct: lower-triangular input only");
    EigenvectorResult out;
    out.v = Vector::Zero(N);
    out.v[k] = 1.0;
    const cplx lam = A(k, k);
    for (long long i = k + 1; i < N; ++i) {
        cplx acc{0.0, 0.0};
        for (long long u = k; u < i; ++u) acc += A(i, u) * out.v[u];
        const cplx gap = lam - A(i, i);
        if (std::abs(gap) <= kDiagGapTol) {
            out.v[i] = 0.0;
            if (std::abs(acc) > kDiagGapTol && !out.witness)
                out.witness = NonDiagonalizableWitness{i, acc};
        } else {
            out.v[i] = acc / gap;
        }
    }
    return out;
}

// growth floor certified by a witness: ||A^m f - f|| >= m |w|
inline double jordan_lower_bound(const NonDiagonalizableWitness& w, long long m) {
    if (m < 0) throw std::invalid_argument("jordan_lower_bound: m must be >= 0");
    return static_cast<double>(m) * std::abs(w.w);
}

struct Diagonalization {
    Matrix B;     // unit lower triangular, columns are eigenvectors
    Matrix Binv;
    Matrix D;     // diag of A
    double reconstruction_error = 0.0;  // ||B^{-1} A B - D||_max
};

inline Diagonalization diagonalize(const Matrix& A) {
    const long long N = A.rows();
    if (A.cols() != N) throw std::invalid_argument("diagonalize: square input");
    for (long long i = 0; i < N; ++i)
        for (long long j = 0; j < N; ++j)
            if (i != j && std::abs(A(i, i) - A(j, j)) <= kDiagGapTol)
                throw std::domain_error("diagonalize: repeated diagonal entries");
    Diagonalization out;
    out.B = Matrix::Zero(N, N);
    out.D = Matrix::Zero(N, N);
    for (long long k = 0; k < N; ++k) {
        out.B.col(k) = eigenvector_construct(A, k).v;
        out.D(k, k) = A(k, k);
    }
    // B is unit lower triangular; invert by forward substitution
    out.Binv = out.B.triangularView<Eigen::Lower>().solve(Matrix::Identity(N, N));
    out.reconstruction_error = (out.Binv * A * out.B - out.D).cwiseAbs().maxCoeff();
    return out;
}

// ---------------------------------------------------------------------
// recurrence decision for lower-triangular windows
// ---------------------------------------------------------------------

using recurlab::to_string;
using recurlab::Verdict;

struct DecideReport {
    Verdict verdict = Verdict::Undecided;
    long long n = 0;               // certified return time if Recurrent
    double diag_residual = 0.0;    // max_j |a_jj^n - 1| at n
    std::vector<double> raw_residuals;  // d(A^n e_k, e_k) upper bounds per basis vector
    double max_raw_residual = 0.0;
    std::string reason;
    std::optional<NonDiagonalizableWitness> witness;
};

inline DecideReport recurrence_decide_lower_triangular(const RowFiniteMatrix& A, long long window,
                                                       double eps, long long horizon,
                                                       int metric_terms = 64) {
    DecideReport rep;
    if (!A.lower_triangular_window(window))
        throw std::invalid_argument("recurrence_decide: window is not lower triangular");
    const Matrix W = A.window(window);
    const long long N = W.rows();

    for (long long i = 0; i < N; ++i) {
        if (std::abs(std::abs(W(i, i)) - 1.0) > kDiagGapTol) {
            rep.verdict = Verdict::NotRecurrent;
            rep.reason = "diagonal entry " + std::to_string(i) +
                         " is not unimodular; its coordinate orbit cannot return";
            return rep;
        }
    }

    // repeated diagonal entries: either harmless or a Jordan witness
    for (long long k = 0; k < N; ++k) {
        bool repeated = false;
        for (long long j = k + 1; j < N; ++j)
            if (std::abs(W(k, k) - W(j, j)) <= kDiagGapTol) repeated = true;
        if (!repeated) continue;
        const EigenvectorResult ev = eigenvector_construct(W, k);
        if (ev.witness) {
            rep.verdict = Verdict::NotRecurrent;
            rep.witness = ev.witness;
            rep.reason = "repeated diagonal with inconsistent eigenvector system; orbit grows like m|w|";
            return rep;
        }
    }

    std::vector<cplx> diag;
    for (long long i = 0; i < N; ++i) diag.push_back(W(i, i) / std::abs(W(i, i)));
    const detect::KroneckerResult kr = detect::kronecker_search(diag, eps, horizon);
    if (!kr.found) {
        rep.verdict = Verdict::Undecided;
        rep.diag_residual = kr.min_residual;
        rep.reason = "horizon exhausted before a simultaneous return";
        return rep;
    }
    rep.verdict = Verdict::Recurrent;
    rep.n = kr.n;
    rep.diag_residual = kr.residual;
    const Matrix P = detect::matrix_power(W, kr.n);
    for (long long k = 0; k < N; ++k) {
        std::vector<cplx> y(static_cast<std::size_t>(N));
        std::vector<cplx> e(static_cast<std::size_t>(N), cplx{0.0, 0.0});
        for (long long i = 0; i < N; ++i) y[static_cast<std::size_t>(i)] = P(i, k);
        e[static_cast<std::size_t>(k)] = 1.0;
        rep.raw_residuals.push_back(product_metric(y, e, metric_terms).hi);
        rep.max_raw_residual = std::max(rep.max_raw_residual, rep.raw_residuals.back());
    }
    return rep;
}

// ---------------------------------------------------------------------
// block powers and strictly-lower formal series
// ---------------------------------------------------------------------

struct BlockPower {
    Matrix top;     // H^n
    Matrix coupling;  // sum_{j=0}^{n-1} C^j B H^{n-1-j}
    Matrix bottom;  // C^n
};

inline BlockPower block_power(const Matrix& H, const Matrix& B, const Matrix& C, long long n) {
    if (H.rows() != H.cols() || C.rows() != C.cols())
        throw std::invalid_argument("block_power: H and C must be square");
    if (B.rows() != C.rows() || B.cols() != H.cols())
        throw std::invalid_argument("block_power: coupling block has wrong shape");
    if (n < 0) throw std::invalid_argument("block_power: n must be >= 0");
    BlockPower out;
    out.top = detect::matrix_power(H, n);
    out.bottom = detect::matrix_power(C, n);
    out.coupling = Matrix::Zero(B.rows(), B.cols());
    Matrix Cj = Matrix::Identity(C.rows(), C.cols());
    for (long long j = 0; j < n; ++j) {
        out.coupling += Cj * B * detect::matrix_power(H, n - 1 - j);
        Cj = Cj * C;
    }
    return out;
}

// sum_{m=1}^{M} f_m A^m for strictly lower-triangular windows; the powers die
// at the window size, so any M >= window gives the same (exact) result.
inline Matrix formal_series(const std::vector<cplx>& f, const Matrix& A) {
    const long long N = A.rows();
    if (A.cols() != N) throw std::invalid_argument("formal_series: square input");
    for (long long i = 0; i < N; ++i)
        for (long long j = i; j < N; ++j)
            if (A(i, j) != cplx{0.0, 0.0})
                throw std::invalid_argument("formal_series: strictly lower-triangular input only");
    Matrix acc = Matrix::Zero(N, N);
    Matrix P = Matrix::Identity(N, N);
    for (std::size_t m = 1; m <= f.size(); ++m) {
        P = P * A;  // A^m
        if (P.cwiseAbs().maxCoeff() == 0.0) break;
        acc += f[m - 1] * P;
    }
    return acc;
}

}  // namespace recurlab::omega
