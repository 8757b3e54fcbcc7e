#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "recurlab/detect.hpp"
#include "recurlab/mobius.hpp"
#include "recurlab/util.hpp"

// =====================================================================
// Multiplicative recurrence for functions on a finite point set, the
// concrete model where "a^n returns to 1" can be decided: everything is
// a tuple of complex values with pointwise operations and the sup norm.
// An element returns iff every value is unimodular and the value
// arguments admit a simultaneous near-integer multiple, which is the
// Kronecker search from detect.hpp. The disk-algebra probe and the
// composition residual at the end connect the same question to
// holomorphic symbols, where only unimodular constants can return.
// =====================================================================

namespace recurlab::funcalg {

using cplx = std::complex<double>;

inline constexpr double kUnimodularTol = 1e-12;

struct AlgebraElement {
    std::vector<cplx> values;

    std::size_t points() const { return values.size(); }
};

inline AlgebraElement one(std::size_t n) {
    return AlgebraElement{std::vector<cplx>(n, cplx{1.0, 0.0})};
}

inline double sup_norm(const AlgebraElement& a) {
    double m = 0.0;
    for (const cplx& v : a.values) m = std::max(m, std::abs(v));
    return m;
}

namespace detail {
inline void check_same_points(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.points() != b.points())
        throw std::invalid_argument("algebra elements live on different point sets");
}
}  // namespace detail

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    detail::check_same_points(a, b);
    AlgebraElement out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

inline AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b) {
    detail::check_same_points(a, b);
    AlgebraElement out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

inline AlgebraElement conj_element(const AlgebraElement& a) {
    AlgebraElement out = a;
    for (cplx& v : out.values) v = std::conj(v);
    return out;
}

inline AlgebraElement power(const AlgebraElement& a, long long n) {
    if (n < 0) throw std::invalid_argument("power: n must be >= 0");
    AlgebraElement acc = one(a.points());
    AlgebraElement base = a;
    long long m = n;
    while (m > 0) {
        if (m & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        m >>= 1;
    }
    return acc;
}

// pointwise reciprocal; defined only away from zeros
inline AlgebraElement inverse(const AlgebraElement& a) {
    AlgebraElement out = a;
    for (cplx& v : out.values) {
        if (std::abs(v) == 0.0) throw std::domain_error("inverse: element has a zero value");
        v = 1.0 / v;
    }
    return out;
}

// For unimodular elements the inverse is the pointwise conjugate; complex
// conjugation commutes with products exactly in floating point, so this
// representative reproduces forward return residuals bit for bit.
inline AlgebraElement unimodular_inverse(const AlgebraElement& a) {
    for (const cplx& v : a.values)
        if (std::abs(std::abs(v) - 1.0) > kUnimodularTol)
            throw std::domain_error("unimodular_inverse: element is not unimodular");
    return conj_element(a);
}

inline double return_residual(const AlgebraElement& a, long long n) {
    return sup_norm(subtract(power(a, n), one(a.points())));
}

// ---------------------------------------------------------------------
// the recurrence decision
// ---------------------------------------------------------------------

struct RecurrenceReport {
    Verdict verdict = Verdict::Undecided;
    long long n = 0;          // certified return time if Recurrent
    double residual = 0.0;    // sup |a^n - 1| at that time
    double min_residual = 0.0;
    long long argmin = 0;
    double nonunimodular_gap = 0.0;  // residual floor forced by a bad value
    std::string reason;
};

// |a^n - 1| >= | |a| - 1 | at every point and every n >= 1, so a single value
// off the circle settles the question without any search.
inline RecurrenceReport mult_recurrence_decide(const AlgebraElement& a, double eps,
                                               long long horizon) {
    if (a.points() == 0) throw std::invalid_argument("mult_recurrence_decide: empty element");
    RecurrenceReport rep;
    double gap = 0.0;
    for (const cplx& v : a.values) gap = std::max(gap, std::abs(std::abs(v) - 1.0));
    if (gap > kUnimodularTol) {
        rep.verdict = Verdict::NotRecurrent;
        rep.nonunimodular_gap = gap;
        rep.reason = "a value sits off the unit circle; returns are blocked below the gap";
        return rep;
    }
    std::vector<cplx> dirs;
    dirs.reserve(a.points());
    for (const cplx& v : a.values) dirs.push_back(v / std::abs(v));
    const detect::KroneckerResult kr = detect::kronecker_search(dirs, eps, horizon);
    rep.min_residual = kr.min_residual;
    rep.argmin = kr.argmin;
    if (kr.found) {
        rep.verdict = Verdict::Recurrent;
        rep.n = kr.n;
        rep.residual = kr.residual;
    } else {
        rep.verdict = Verdict::Undecided;
        rep.reason = "horizon exhausted before a simultaneous return";
    }
    return rep;
}

// ---------------------------------------------------------------------
// algebraic side conditions
// ---------------------------------------------------------------------

// a^n b - b = (a^n - 1) b, so the sup norm factors through the product
struct IdealCheck {
    double lhs = 0.0;  // ||a^n b - b||
    double rhs = 0.0;  // ||a^n - 1|| ||b||
    bool ok = false;
};

inline IdealCheck ideal_inequality(const AlgebraElement& a, const AlgebraElement& b, long long n) {
    detail::check_same_points(a, b);
    IdealCheck chk;
    const AlgebraElement an = power(a, n);
    chk.lhs = sup_norm(subtract(multiply(an, b), b));
    chk.rhs = sup_norm(subtract(an, one(a.points()))) * sup_norm(b);
    chk.ok = chk.lhs <= chk.rhs * (1.0 + 1e-12);
    return chk;
}

// dual element c = conj(b) / sum |b|^2 pairs with b to 1; witnesses that a
// nonzero element is not annihilated by every summing functional
struct PartitionCertificate {
    AlgebraElement c;
    cplx pairing{0.0, 0.0};   // sum_i b_i c_i
    double residual = 0.0;    // |pairing - 1|
};

inline PartitionCertificate partition_certificate(const AlgebraElement& b) {
    double mass = 0.0;
    for (const cplx& v : b.values) mass += std::norm(v);
    if (mass == 0.0) throw std::domain_error("partition_certificate: zero element");
    PartitionCertificate cert;
    cert.c = conj_element(b);
    for (cplx& v : cert.c.values) v /= mass;
    for (std::size_t i = 0; i < b.values.size(); ++i) cert.pairing += b.values[i] * cert.c.values[i];
    cert.residual = std::abs(cert.pairing - cplx{1.0, 0.0});
    return cert;
}

// where b carries weight, a must hug the circle: | |a_i| - 1 | <= tol / |b_i|.
// Zero values of b constrain nothing.
struct SupportCheck {
    bool ok = true;
    std::size_t worst_index = 0;
    double worst_excess = 0.0;  // max of | |a_i| - 1 | * |b_i| - tol
};

inline SupportCheck unimodular_support(const AlgebraElement& a, const AlgebraElement& b,
                                       double tol) {
    detail::check_same_points(a, b);
    SupportCheck chk;
    double worst = -1.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double bk = std::abs(b.values[i]);
        if (bk == 0.0) continue;
        const double excess = std::abs(std::abs(a.values[i]) - 1.0) * bk - tol;
        if (excess > worst) {
            worst = excess;
            chk.worst_index = i;
        }
        if (excess > 0.0) chk.ok = false;
    }
    chk.worst_excess = worst;
    return chk;
}

// ---------------------------------------------------------------------
// holomorphic symbols
// ---------------------------------------------------------------------

// A polynomial that keeps |p| = 1 on the closed disk is a unimodular
// constant, so a grid deviation beyond tol anywhere rules returns out.
struct DiskProbe {
    double max_dev_interior = 0.0;
    double max_dev_circle = 0.0;
    Verdict verdict = Verdict::NotRecurrent;
};

inline cplx horner(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

inline DiskProbe disk_corollary_probe(const std::vector<cplx>& coeffs, double tol = 1e-9,
                                      int radial = 16, int angular = 128) {
    if (coeffs.empty()) throw std::invalid_argument("disk_corollary_probe: empty polynomial");
    if (radial < 1 || angular < 1)
        throw std::invalid_argument("disk_corollary_probe: need a nonempty grid");
    DiskProbe probe;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int i = 1; i <= radial; ++i) {
        const double r = static_cast<double>(i) / static_cast<double>(radial + 1);
        for (int k = 0; k < angular; ++k) {
            const cplx z = std::polar(r, two_pi * k / angular);
            probe.max_dev_interior =
                std::max(probe.max_dev_interior, std::abs(std::abs(horner(coeffs, z)) - 1.0));
        }
    }
    for (int k = 0; k < angular; ++k) {
        const cplx z = std::polar(1.0, two_pi * k / angular);
        probe.max_dev_circle =
            std::max(probe.max_dev_circle, std::abs(std::abs(horner(coeffs, z)) - 1.0));
    }
    const double dev = std::max(probe.max_dev_interior, probe.max_dev_circle);
    probe.verdict = dev <= tol ? Verdict::Recurrent : Verdict::NotRecurrent;
    return probe;
}

// sup_{|z|=1} |phi_n(z) - z| for the n-fold composition; |phi_n(0)| is a free
// lower bound (take z = 0 inside the disk and use the maximum principle).
struct CompositionResidual {
    double residual = 0.0;
    double lower_bound = 0.0;
};

inline CompositionResidual composition_residual(const mobius::MobiusMap& phi, long long n,
                                                int grid = mobius::kBoundaryGrid) {
    if (grid < 1) throw std::invalid_argument("composition_residual: need a nonempty grid");
    const mobius::MobiusMap pn = mobius::iterate(phi, n);
    CompositionResidual out;
    constexpr double two_pi = 6.283185307179586476925286766559;
    if (mobius::numerically_constant(pn)) {
        const cplx w = mobius::constant_value(pn);
        out.lower_bound = std::abs(w);
        for (int k = 0; k < grid; ++k)
            out.residual =
                std::max(out.residual, std::abs(w - std::polar(1.0, two_pi * k / grid)));
        return out;
    }
    out.lower_bound = std::abs(mobius::apply(pn, cplx{0.0, 0.0}));
    for (int k = 0; k < grid; ++k) {
        const cplx z = std::polar(1.0, two_pi * k / grid);
        out.residual = std::max(out.residual, std::abs(mobius::apply(pn, z) - z));
    }
    return out;
}

}  // namespace recurlab::funcalg
