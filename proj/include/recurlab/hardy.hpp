#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "recurlab/mobius.hpp"

// =====================================================================
// Weighted Hardy spaces H^2(beta) realized on truncated coefficient
// vectors: <sum a_n z^n, sum b_n z^n> = sum a_n conj(b_n) beta(n)^2.
// The weighted Dirichlet scale S_nu uses beta(n) = (n+1)^nu; nu = 1/2
// is the Dirichlet-type norm sum (n+1) |c_n|^2 used by the splitting
// into constants plus the derivative part.
//
// Composition with a disk self-map phi acts column-wise: column j of
// the (N+1)x(N+1) matrix holds the Taylor coefficients of phi^j, so the
// matrix applied to coeffs(f) is the truncation of f o phi. For the
// parabolic family the dropped tail of each column is geometric with
// ratio |w| = |na/(na+2)|.
// =====================================================================

namespace recurlab::hardy {

using cplx = std::complex<double>;
using mobius::MobiusMap;
using mobius::ParabolicParam;

struct WeightSequence {
    enum class Kind { dirichlet, explicit_list };
    Kind kind = Kind::dirichlet;
    double nu = 0.0;
    std::vector<double> values;  // explicit_list only

    static WeightSequence dirichlet(double nu) {
        WeightSequence w;
        w.kind = Kind::dirichlet;
        w.nu = nu;
        return w;
    }
    static WeightSequence explicit_list(std::vector<double> vals) {
        for (double v : vals)
            if (!(v > 0.0)) throw std::invalid_argument("weights must be positive");
        WeightSequence w;
        w.kind = Kind::explicit_list;
        w.values = std::move(vals);
        return w;
    }
    double beta(long long n) const {
        if (n < 0) throw std::invalid_argument("beta: negative index");
        if (kind == Kind::dirichlet) return std::pow(static_cast<double>(n) + 1.0, nu);
        if (static_cast<std::size_t>(n) >= values.size())
            throw std::out_of_range("beta: index beyond explicit weight list");
        return values[static_cast<std::size_t>(n)];
    }
    bool same(const WeightSequence& o, long long upto) const {
        for (long long n = 0; n <= upto; ++n)
            if (std::abs(beta(n) - o.beta(n)) > 1e-12 * (beta(n) + o.beta(n))) return false;
        return true;
    }
};

struct WeightedCoefficientVector {
    std::vector<cplx> c;  // coefficients 0..N
    WeightSequence w;
    int N() const { return static_cast<int>(c.size()) - 1; }
};

inline double norm(const WeightedCoefficientVector& f) {
    double s = 0.0;
    for (std::size_t n = 0; n < f.c.size(); ++n) {
        const double b = f.w.beta(static_cast<long long>(n));
        s += std::norm(f.c[n]) * b * b;
    }
    return std::sqrt(s);
}

inline cplx inner(const WeightedCoefficientVector& f, const WeightedCoefficientVector& g) {
    const std::size_t len = std::max(f.c.size(), g.c.size());
    if (!f.w.same(g.w, static_cast<long long>(len) - 1))
        throw std::invalid_argument("inner: mismatched weight sequences");
    cplx s{0.0, 0.0};
    for (std::size_t n = 0; n < len; ++n) {
        const cplx a = n < f.c.size() ? f.c[n] : cplx{0.0, 0.0};
        const cplx b = n < g.c.size() ? g.c[n] : cplx{0.0, 0.0};
        const double bet = f.w.beta(static_cast<long long>(n));
        s += a * std::conj(b) * bet * bet;
    }
    return s;
}

// truncated Cauchy product, degree cap N
inline std::vector<cplx> truncated_multiply(const std::vector<cplx>& u,
                                            const std::vector<cplx>& v, int N) {
    std::vector<cplx> out(static_cast<std::size_t>(N) + 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < u.size() && static_cast<int>(i) <= N; ++i) {
        if (u[i] == cplx{0.0, 0.0}) continue;
        const std::size_t jmax = std::min(v.size(), static_cast<std::size_t>(N) + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += u[i] * v[j];
    }
    return out;
}

// Column j = Taylor coefficients of phi^j (phi^0 = 1). Requires the pole of
// phi outside the closed disk, which taylor_coeffs enforces.
inline Eigen::MatrixXcd composition_matrix(const MobiusMap& m, const WeightSequence&,
                                           int N) {
    if (N < 0) throw std::invalid_argument("composition_matrix: N must be >= 0");
    const std::vector<cplx> phi = mobius::taylor_coeffs(m, N);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    std::vector<cplx> col(static_cast<std::size_t>(N) + 1, cplx{0.0, 0.0});
    col[0] = 1.0;
    M(0, 0) = 1.0;
    for (int j = 1; j <= N; ++j) {
        col = truncated_multiply(col, phi, N);
        for (int i = 0; i <= N; ++i) M(i, j) = col[static_cast<std::size_t>(i)];
    }
    return M;
}

// ---------------------------------------------------------------------
// Derivatives of composites by summing over integer partitions
// ---------------------------------------------------------------------
//
// (f o phi)^{(m)}(0) = sum over j_1..j_m >= 0 with sum u*j_u = m of
//     m! / (prod j_u! (u!)^{j_u}) * f^{(s)}(phi(0)) * prod (phi^{(u)}(0))^{j_u},
// where s = sum j_u. The m=2 case expands to f''(phi)(phi')^2 + f'(phi)phi''.

namespace detail {

template <typename Visitor>
inline void enumerate_partitions(int m, Visitor&& visit) {
    std::vector<int> j(static_cast<std::size_t>(m) + 1, 0);  // j[u], u = 1..m
    // recursive descent over part size u with remaining weight rem
    auto rec = [&](auto&& self, int u, int rem) -> void {
        if (u == 0) {
            if (rem == 0) visit(j);
            return;
        }
        for (int cnt = 0; cnt * u <= rem; ++cnt) {
            j[static_cast<std::size_t>(u)] = cnt;
            self(self, u - 1, rem - cnt * u);
        }
        j[static_cast<std::size_t>(u)] = 0;
    };
    rec(rec, m, m);
}

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

// f_derivs[s] = f^{(s)} evaluated at phi(0), s = 0..m.
// phi_derivs[u] = phi^{(u)}(0), u = 1..m (index 0 is ignored).
inline cplx faa_di_bruno(const std::vector<cplx>& f_derivs,
                         const std::vector<cplx>& phi_derivs, int m) {
    if (m < 0) throw std::invalid_argument("faa_di_bruno: m must be >= 0");
    if (f_derivs.size() < static_cast<std::size_t>(m) + 1 ||
        phi_derivs.size() < static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("faa_di_bruno: need derivatives up to order m");
    if (m == 0) return f_derivs[0];
    cplx total{0.0, 0.0};
    detail::enumerate_partitions(m, [&](const std::vector<int>& j) {
        int s = 0;
        double denom = 1.0;
        cplx prod{1.0, 0.0};
        for (int u = 1; u <= m; ++u) {
            const int ju = j[static_cast<std::size_t>(u)];
            if (ju == 0) continue;
            s += ju;
            denom *= detail::factorial(ju) * std::pow(detail::factorial(u), ju);
            for (int t = 0; t < ju; ++t) prod *= phi_derivs[static_cast<std::size_t>(u)];
        }
        total += detail::factorial(m) / denom * f_derivs[static_cast<std::size_t>(s)] * prod;
    });
    return total;
}

// polynomial derivative evaluation: f^{(k)}(z) for f given by coefficients
inline cplx poly_derivative_at(const std::vector<cplx>& coeffs, int k, cplx z) {
    if (k < 0) throw std::invalid_argument("poly_derivative_at: k must be >= 0");
    cplx acc{0.0, 0.0};
    for (std::size_t idx = coeffs.size(); idx-- > 0;) {
        const int jj = static_cast<int>(idx);
        if (jj < k) break;
        double fall = 1.0;  // jj (jj-1) ... (jj-k+1)
        for (int t = 0; t < k; ++t) fall *= (jj - t);
        acc = acc * z + fall * coeffs[idx];
    }
    return acc;
}

// ---------------------------------------------------------------------
// Derivative decay along the parabolic family
// ---------------------------------------------------------------------
//
// For (1-2k)/2 < nu < 0 the k-th composite derivative datum
//     q(n) = |f^{(k)}(phi_n(0))| * |phi_n'(0)|^k
// decays like (n Re a)^{(1-2nu-2k)/2}. The constant is fitted as the max of
// q(n) / (n Re a)^{exponent} over the computed range and the bound is then
// re-checked pointwise.

struct DecayReport {
    std::vector<double> q;  // q[i] is the value at n = i+1
    double exponent = 0.0;
    double fitted_M = 0.0;
    bool bound_holds = false;
};

inline DecayReport decay_sequence(cplx a, double nu, int k,
                                  const WeightedCoefficientVector& f, long long n_max) {
    if (!(a.real() > 0.0)) throw std::invalid_argument("decay_sequence: Re a must be > 0");
    if (k < 1) throw std::invalid_argument("decay_sequence: k must be >= 1");
    if (!(nu > (1.0 - 2.0 * k) / 2.0 && nu < 0.0))
        throw std::invalid_argument("decay_sequence: need (1-2k)/2 < nu < 0");
    if (n_max < 1) throw std::invalid_argument("decay_sequence: n_max must be >= 1");
    DecayReport rep;
    rep.exponent = (1.0 - 2.0 * nu - 2.0 * k) / 2.0;
    rep.q.reserve(static_cast<std::size_t>(n_max));
    const double x = a.real();
    double M = 0.0;
    for (long long n = 1; n <= n_max; ++n) {
        const ParabolicParam p{a, n};
        const cplx phi0 = mobius::kernel_params(p).phi0;
        const cplx d1 = mobius::derivative_at_zero(p, 1);
        const double q =
            std::abs(poly_derivative_at(f.c, k, phi0)) * std::pow(std::abs(d1), k);
        rep.q.push_back(q);
        M = std::max(M, q / std::pow(static_cast<double>(n) * x, rep.exponent));
    }
    rep.fitted_M = M;
    rep.bound_holds = true;
    for (long long n = 1; n <= n_max; ++n) {
        const double bound =
            M * std::pow(static_cast<double>(n) * x, rep.exponent) * (1.0 + 1e-12);
        if (rep.q[static_cast<std::size_t>(n - 1)] > bound) rep.bound_holds = false;
    }
    return rep;
}

// ---------------------------------------------------------------------
// Coefficient obstructions to recurrence along the parabolic family
// ---------------------------------------------------------------------
//
// Using phi_n^{(u)}(0) = u! phi_n'(0) w^{u-1}, the partition sum collapses to
//
//   (f o phi_n)^{(m)}(0) = sum_{s=1}^m c_{s,m} L_n(s) w^{m-s},
//   c_{s,m} = sum_{sum j_u = s, sum u j_u = m} m!/(j_1! ... j_m!),
//   L_n(s) = f^{(s)}(phi_n(0)) (phi_n'(0))^s.
//
// If f were a recurrent vector, the limits ell(s) = lim L_n(s) would satisfy
// the triangular system  m! b_m = sum_s c_{s,m} ell(s)  (w -> 1), and for each
// order m inside the decay window ell(m) = 0, which forces b_m to be a fixed
// linear combination of b_1..b_{m-1}. Order m = 1 forces b_1 = 0, order m = 2
// forces b_2 = b_1, order m = 3 forces b_3 = 2 b_2 - b_1, and so on. A vector
// violating its relation cannot be recurrent.

struct ObstructionRow {
    int m = 0;
    std::vector<cplx> seq;  // (f o phi_n)^{(m)}(0), n = 1..horizon
    cplx limit_estimate{0.0, 0.0};
    bool limit_converged = false;
    bool decay_active = false;       // nu > (1-2m)/2
    std::vector<double> relation;    // b_m = sum relation[s-1] * b_s (s < m)
    cplx relation_residual{0.0, 0.0};
    bool violated = false;
};

struct ObstructionReport {
    std::vector<ObstructionRow> rows;
    bool flagged = false;              // some order rules f out
    double residual_floor = 0.0;       // beta(1) * |phi_n'(0) - 1| tail estimate
    double residual_min = 0.0;         // min over n of the same coefficient bound
};

namespace detail {

// c_{s,m} table for s = 0..m
inline std::vector<double> collapsed_weights(int m) {
    std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
    enumerate_partitions(m, [&](const std::vector<int>& j) {
        int s = 0;
        double denom = 1.0;
        for (int u = 1; u <= m; ++u) {
            s += j[static_cast<std::size_t>(u)];
            denom *= factorial(j[static_cast<std::size_t>(u)]);
        }
        c[static_cast<std::size_t>(s)] += factorial(m) / denom;
    });
    return c;
}

}  // namespace detail

inline ObstructionReport obstruction_scan(cplx a, double nu, int k_max,
                                          const WeightedCoefficientVector& f,
                                          long long horizon) {
    if (!(a.real() > 0.0)) throw std::invalid_argument("obstruction_scan: Re a must be > 0");
    if (k_max < 1) throw std::invalid_argument("obstruction_scan: k_max must be >= 1");
    if (!(nu > (1.0 - 2.0 * k_max) / 2.0 && nu < 0.0))
        throw std::invalid_argument("obstruction_scan: need (1-2k_max)/2 < nu < 0");
    if (horizon < 10) throw std::invalid_argument("obstruction_scan: horizon too small");

    ObstructionReport rep;
    // ell(s) expressed over (b_1..b_s); ell(1) = b_1
    std::vector<std::vector<double>> ell;
    const double beta1 = std::pow(2.0, nu);
    double floor_min = std::numeric_limits<double>::infinity();
    double tail_min = std::numeric_limits<double>::infinity();
    const long long tail_start = horizon - horizon / 10 + 1;
    for (long long n = 1; n <= horizon; ++n) {
        const double d1 = std::abs(mobius::derivative_at_zero(ParabolicParam{a, n}, 1));
        const double lower = beta1 * std::abs(d1 - 1.0);
        floor_min = std::min(floor_min, lower);
        if (n >= tail_start) tail_min = std::min(tail_min, lower);
    }
    rep.residual_min = floor_min;
    rep.residual_floor = tail_min;

    for (int m = 1; m <= k_max; ++m) {
        ObstructionRow row;
        row.m = m;
        row.seq.reserve(static_cast<std::size_t>(horizon));
        std::vector<cplx> fd(static_cast<std::size_t>(m) + 1);
        std::vector<cplx> pd(static_cast<std::size_t>(m) + 1);
        for (long long n = 1; n <= horizon; ++n) {
            const ParabolicParam p{a, n};
            const cplx phi0 = mobius::kernel_params(p).phi0;
            for (int s = 0; s <= m; ++s)
                fd[static_cast<std::size_t>(s)] = poly_derivative_at(f.c, s, phi0);
            for (int u = 1; u <= m; ++u)
                pd[static_cast<std::size_t>(u)] = mobius::derivative_at_zero(p, u);
            row.seq.push_back(faa_di_bruno(fd, pd, m));
        }
        // limit estimate over the last 10% of the horizon
        cplx acc{0.0, 0.0};
        long long cnt = 0;
        for (long long n = tail_start; n <= horizon; ++n) {
            acc += row.seq[static_cast<std::size_t>(n - 1)];
            ++cnt;
        }
        row.limit_estimate = acc / static_cast<double>(cnt);
        row.limit_converged = true;
        for (long long n = tail_start; n <= horizon; ++n)
            if (std::abs(row.seq[static_cast<std::size_t>(n - 1)] - row.limit_estimate) > 1e-4)
                row.limit_converged = false;

        // triangular elimination of the ell's
        const std::vector<double> c = detail::collapsed_weights(m);
        std::vector<double> ell_m(static_cast<std::size_t>(m), 0.0);
        ell_m[static_cast<std::size_t>(m - 1)] = detail::factorial(m);  // m! b_m
        for (int s = 1; s < m; ++s)
            for (int t = 0; t < s; ++t)
                ell_m[static_cast<std::size_t>(t)] -=
                    c[static_cast<std::size_t>(s)] * ell[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t)];
        ell.push_back(ell_m);

        row.decay_active = nu > (1.0 - 2.0 * m) / 2.0;
        if (row.decay_active) {
            // ell(m) = 0 forces m! b_m = sum_{s<m} c_{s,m} ell(s)
            row.relation.assign(static_cast<std::size_t>(m - 1), 0.0);
            for (int s = 1; s < m; ++s)
                for (int t = 0; t < s; ++t)
                    row.relation[static_cast<std::size_t>(t)] +=
                        c[static_cast<std::size_t>(s)] *
                        ell[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t)] /
                        detail::factorial(m);
            cplx combo{0.0, 0.0};
            for (int t = 1; t < m; ++t) {
                const cplx bt = static_cast<std::size_t>(t) < f.c.size() ? f.c[static_cast<std::size_t>(t)]
                                                                         : cplx{0.0, 0.0};
                combo += row.relation[static_cast<std::size_t>(t - 1)] * bt;
            }
            const cplx bm = static_cast<std::size_t>(m) < f.c.size() ? f.c[static_cast<std::size_t>(m)]
                                                                     : cplx{0.0, 0.0};
            row.relation_residual = bm - combo;
            double scale = std::abs(bm) + std::abs(combo) + 1.0;
            row.violated = std::abs(row.relation_residual) > 1e-9 * scale;
            if (row.violated) rep.flagged = true;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------
// Embeddings and the Dirichlet splitting
// ---------------------------------------------------------------------

// sup_{N < k <= 10N} alpha(k)/beta(k); with alpha <= beta pointwise this bounds
// ||f - P_N f||_alpha <= result * ||f||_beta for tails supported in (N, 10N].
inline double embedding_tail(const WeightSequence& alpha, const WeightSequence& beta, int N) {
    if (N < 1) throw std::invalid_argument("embedding_tail: N must be >= 1");
    for (long long k = 0; k <= 10LL * N; ++k)
        if (alpha.beta(k) > beta.beta(k) * (1.0 + 1e-12))
            throw std::domain_error("embedding_tail: alpha exceeds beta (hypothesis violated)");
    double sup = 0.0;
    for (long long k = N + 1; k <= 10LL * N; ++k)
        sup = std::max(sup, alpha.beta(k) / beta.beta(k));
    return sup;
}

struct DirichletSplit {
    cplx constant;                    // f(0)
    WeightedCoefficientVector tilde;  // f - f(0), the derivative-carrying part
};

inline DirichletSplit dirichlet_split(const WeightedCoefficientVector& f) {
    if (f.w.kind != WeightSequence::Kind::dirichlet || std::abs(f.w.nu - 0.5) > 1e-12)
        throw std::invalid_argument("dirichlet_split: requires the nu = 1/2 scale");
    DirichletSplit out;
    out.constant = f.c.empty() ? cplx{0.0, 0.0} : f.c[0];
    out.tilde = f;
    if (!out.tilde.c.empty()) out.tilde.c[0] = 0.0;
    return out;
}

// Iterate residuals in the nu = 1/2 norm for an automorphism with attracting
// boundary point 1: r(n) = ||phi_n - z|| and s(n) = ||phi_n - (z+1)||, both at
// truncation N.
struct DirichletResiduals {
    std::vector<double> r;
    std::vector<double> s;
    std::vector<cplx> phi_at_zero;
};

inline DirichletResiduals dirichlet_residual(const MobiusMap& m, long long n_max, int N) {
    const mobius::MapClass cls = mobius::classify(m);
    const bool ok_tag = cls.tag == mobius::MapTag::parabolic_automorphism ||
                        cls.tag == mobius::MapTag::hyperbolic_automorphism;
    if (!ok_tag || !cls.denjoy_wolff || std::abs(*cls.denjoy_wolff - cplx{1.0, 0.0}) > 1e-6)
        throw std::invalid_argument(
            "dirichlet_residual: need a parabolic or hyperbolic automorphism attracted to 1");
    if (n_max < 1 || N < 1) throw std::invalid_argument("dirichlet_residual: bad sizes");
    DirichletResiduals out;
    const WeightSequence w = WeightSequence::dirichlet(0.5);
    for (long long n = 1; n <= n_max; ++n) {
        const MobiusMap mn = mobius::iterate(m, n);
        std::vector<cplx> c;
        if (std::abs(mn.d) > std::abs(mn.c)) {
            c = mobius::taylor_coeffs(mn, N);
        } else {
            // deep in the convergence to the boundary point the det-1 record
            // collapses to its constant limit in double precision; the
            // correctly rounded coefficients are then those of that constant
            c.assign(static_cast<std::size_t>(N) + 1, cplx{0.0, 0.0});
            c[0] = mn.b / mn.d;
        }
        out.phi_at_zero.push_back(c[0]);
        WeightedCoefficientVector fr{c, w};
        fr.c[1] -= 1.0;  // minus id
        out.r.push_back(norm(fr));
        fr.c[0] -= 1.0;  // minus (z + 1)
        out.s.push_back(norm(fr));
    }
    return out;
}

}  // namespace recurlab::hardy
