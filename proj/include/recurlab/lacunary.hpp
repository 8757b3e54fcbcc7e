#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

// =====================================================================
// Sparse power series sum_j (1+m_j)^{nu/2} z^{m_j} whose exponents grow
// fast enough that one term dominates on a matched annulus. Exponents
// are picked greedily from the base {2, 4, 8, ...}; the two
// admissibility tests below keep, for each p, every earlier term small
// against the p-th on the annulus r^{m_p} in [1/2, 3/4] and every later
// term geometrically negligible there. All size comparisons run in the
// log domain because (3/4)^{m/m'} underflows long before the inequality
// stops being informative.
// =====================================================================

namespace recurlab::lacunary {

inline double coefficient(long long m, double nu) {
    return std::exp(0.5 * nu * std::log1p(static_cast<double>(m)));
}

namespace detail {

// later term at exponent M stays below eps^{gap}/4 of the j-th coefficient
// on the j-th annulus: log form of (1+M)^{nu/2} (3/4)^{M/m_j} <
// eps^{gap} (1+m_j)^{nu/2} / 4
inline bool gap_condition(long long m_j, long long M, int gap, double nu, double eps) {
    const double lhs = (static_cast<double>(M) / static_cast<double>(m_j)) * std::log(0.75) +
                       0.5 * nu * std::log1p(static_cast<double>(M));
    const double rhs = gap * std::log(eps) - std::log(4.0) +
                       0.5 * nu * std::log1p(static_cast<double>(m_j));
    return lhs < rhs;
}

// earlier coefficients sum below a quarter of the new one
inline bool sum_condition(const std::vector<long long>& ms, long long M, double nu) {
    double sum = 0.0;
    for (long long m : ms) sum += coefficient(m, nu);
    return sum < 0.25 * coefficient(M, nu);
}

inline bool admissible(const std::vector<long long>& ms, long long M, double nu, double eps) {
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const int gap = static_cast<int>(ms.size() - i);
        if (!gap_condition(ms[i], M, gap, nu, eps)) return false;
    }
    return sum_condition(ms, M, nu);
}

}  // namespace detail

// greedy-minimal choice: each exponent is the smallest power of two that
// clears both admissibility tests against everything already chosen
inline std::vector<long long> select_exponents(double nu, double eps, int count,
                                               int max_log2 = 62) {
    if (!(nu > 0)) throw std::invalid_argument("select_exponents: need nu > 0");
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("select_exponents: need 0 < eps < 1");
    if (count < 1) throw std::invalid_argument("select_exponents: need count >= 1");
    std::vector<long long> ms;
    int j = 1;
    while (static_cast<int>(ms.size()) < count) {
        long long M = 0;
        for (; j <= max_log2; ++j) {
            const long long cand = 1LL << j;
            if (detail::admissible(ms, cand, nu, eps)) {
                M = cand;
                ++j;
                break;
            }
        }
        if (M == 0) throw std::runtime_error("select_exponents: power-of-two base exhausted");
        ms.push_back(M);
    }
    return ms;
}

// ---------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------

// angle 2 pi num/den; exponent phases m*num/den are reduced mod den as
// integers so huge m never loses the angle to rounding
struct Angle {
    long long num = 0;
    long long den = 1;
};

inline std::complex<double> eval_log(const std::vector<long long>& ms, double nu, double ln_r,
                                     const Angle& theta) {
    if (theta.den < 1) throw std::invalid_argument("eval_log: angle denominator must be >= 1");
    if (!(ln_r <= 0)) throw std::invalid_argument("eval_log: need r <= 1");
    std::complex<double> acc{0.0, 0.0};
    const long long den = theta.den;
    const long long num = ((theta.num % den) + den) % den;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (long long m : ms) {
        const double mag = std::exp(0.5 * nu * std::log1p(static_cast<double>(m)) +
                                    static_cast<double>(m) * ln_r);
        const long long red = ((m % den) * num) % den;
        const double phase = two_pi * static_cast<double>(red) / static_cast<double>(den);
        acc += mag * std::polar(1.0, phase);
    }
    return acc;
}

// the whole-series norm bookkeeping: sum (1+m_j)^{-nu}
inline double norm_square(const std::vector<long long>& ms, double nu) {
    double sum = 0.0;
    for (long long m : ms) sum += std::exp(-nu * std::log1p(static_cast<double>(m)));
    return sum;
}

// sum of |terms| at real radius r, used to watch the radial blow-up
inline std::vector<double> radial_values(const std::vector<long long>& ms, double nu,
                                         const std::vector<double>& radii) {
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (!(r > 0 && r < 1)) throw std::invalid_argument("radial_values: need 0 < r < 1");
        double s = 0.0;
        const double ln_r = std::log(r);
        for (long long m : ms)
            s += std::exp(0.5 * nu * std::log1p(static_cast<double>(m)) +
                          static_cast<double>(m) * ln_r);
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------
// annulus audit
// ---------------------------------------------------------------------
//
// A_p is the annulus where the p-th term has r^{m_p} in [1/2, 3/4]. A
// triangle-inequality floor says |f| >= (5/12)(1+m_1)^{nu/2} on A_1 and
// |f| >= (1/6)(1+m_p)^{nu/2} for p >= 2; the audit samples a radius x
// angle grid (extremal radii included) and reports the observed minimum
// against that floor.

struct AnnulusAudit {
    int p = 0;                 // 1-based term index
    double ln_r_lo = 0.0;      // -ln 2 / m_p
    double ln_r_hi = 0.0;      // -ln(4/3) / m_p
    double floor_bound = 0.0;
    double min_abs = 0.0;
    double argmin_ln_r = 0.0;
    Angle argmin_angle;
    bool ok = false;
};

inline AnnulusAudit annulus_audit(const std::vector<long long>& ms, double nu, int p,
                                  int radial_samples = 64, int angular_samples = 64) {
    if (p < 1 || p > static_cast<int>(ms.size()))
        throw std::invalid_argument("annulus_audit: term index out of range");
    if (radial_samples < 2 || angular_samples < 1)
        throw std::invalid_argument("annulus_audit: need >= 2 radii and >= 1 angle");
    const long long mp = ms[static_cast<std::size_t>(p - 1)];
    AnnulusAudit audit;
    audit.p = p;
    audit.ln_r_lo = -std::log(2.0) / static_cast<double>(mp);
    audit.ln_r_hi = -std::log(4.0 / 3.0) / static_cast<double>(mp);
    audit.floor_bound =
        (p == 1 ? 5.0 / 12.0 : 1.0 / 6.0) * coefficient(mp, nu);
    audit.min_abs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < radial_samples; ++i) {
        const double ln_r = audit.ln_r_lo + (audit.ln_r_hi - audit.ln_r_lo) *
                                                static_cast<double>(i) /
                                                static_cast<double>(radial_samples - 1);
        for (int k = 0; k < angular_samples; ++k) {
            const Angle theta{k, angular_samples};
            const double v = std::abs(eval_log(ms, nu, ln_r, theta));
            if (v < audit.min_abs) {
                audit.min_abs = v;
                audit.argmin_ln_r = ln_r;
                audit.argmin_angle = theta;
            }
        }
    }
    audit.ok = audit.min_abs >= audit.floor_bound;
    return audit;
}

}  // namespace recurlab::lacunary
