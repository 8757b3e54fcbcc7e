#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// =====================================================================
// Linear fractional maps z -> (az+b)/(cz+d) as 2x2 coefficient records.
//
// Coefficients are kept normalized to ad - bc = 1; the complex square
// root leaves a global sign free, so equality of maps is coefficient
// equality modulo that sign. Composition is the matrix product, and the
// n-th iterate multiplies the factors out one by one, which keeps the
// rounding error linear in n.
//
// The one-parameter family used throughout the weighted-space experiments,
//
//     phi_n(z) = ((2 - na) z + na) / (-na z + 2 + na),   Re a > 0,
//
// has determinant 4 before normalization and satisfies the exact
// semigroup law M(a) M(b) = M(a+b), i.e. phi_n is the n-th iterate of
// phi_1. Its kernel form is phi_n = gamma + alpha / (1 - w z) with
//
//     gamma = (na-2)/(na),  alpha = 4/(na(na+2)),  w = na/(na+2),
//
// and the derivatives at the origin collapse to the closed form
//
//     phi_n^{(k)}(0) = k! * (4/(na+2)^2) * (na/(na+2))^{k-1}.
// =====================================================================

namespace recurlab::mobius {

using cplx = std::complex<double>;

inline constexpr double kClassifyTol = 1e-9;  // classification threshold
inline constexpr int kBoundaryGrid = 256;     // self-map boundary samples

struct MobiusMap {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};
};

inline MobiusMap make_map(cplx a, cplx b, cplx c, cplx d) {
    const cplx det = a * d - b * c;
    // degenerate means the determinant is lost to cancellation between the
    // two products, so the yardstick is their magnitude, not the coefficients'
    const double scale = std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c);
    if (std::abs(det) <= 1e-14 * scale + std::numeric_limits<double>::min())
        throw std::invalid_argument("make_map: degenerate coefficients (ad - bc ~ 0)");
    const cplx s = std::sqrt(det);
    return {a / s, b / s, c / s, d / s};
}

inline MobiusMap identity_map() { return {1.0, 0.0, 0.0, 1.0}; }

// Coefficient distance modulo the global sign left free by det-normalization.
inline double coefficient_distance(const MobiusMap& m1, const MobiusMap& m2) {
    auto maxdiff = [&](double s) {
        return std::max(std::max(std::abs(m1.a - s * m2.a), std::abs(m1.b - s * m2.b)),
                        std::max(std::abs(m1.c - s * m2.c), std::abs(m1.d - s * m2.d)));
    };
    return std::min(maxdiff(1.0), maxdiff(-1.0));
}

inline cplx apply(const MobiusMap& m, cplx z) {
    const cplx den = m.c * z + m.d;
    const double scale = (std::abs(m.c) * std::abs(z) + std::abs(m.d));
    if (std::abs(den) <= 1e-14 * scale + std::numeric_limits<double>::min())
        throw std::domain_error("apply: z is at (or numerically at) the pole");
    return (m.a * z + m.b) / den;
}

inline MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2) {
    // Matrix product of two det-1 records, so the result has det 1 up to
    // rounding. Renormalize to damp the drift, but only while cancellation
    // in a*d - b*c leaves the determinant resolvable; past that point the
    // computed value is noise and dividing by its root would wreck an
    // otherwise fine map (the scale is projectively meaningless anyway).
    MobiusMap r{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
    const cplx det = r.a * r.d - r.b * r.c;
    const double scale = std::abs(r.a) * std::abs(r.d) + std::abs(r.b) * std::abs(r.c);
    if (std::abs(det) > 1e-10 * scale) {
        const cplx s = std::sqrt(det);
        r = {r.a / s, r.b / s, r.c / s, r.d / s};
    }
    return r;
}

inline MobiusMap iterate(const MobiusMap& m, long long n) {
    if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
    // sequential products: composing with the fixed small factor keeps the
    // rounding error linear in n, where repeated squaring would compound it
    MobiusMap acc = identity_map();
    for (long long i = 0; i < n; ++i) acc = compose(acc, m);
    return acc;
}

// High iterates of a map whose orbits converge to one point approach a
// rank-one matrix, and once the determinant is lost to cancellation the
// record stores nothing beyond that constant limit. Callers that feed deep
// iterates into coefficient formulas check for this regime and use the
// constant directly.
inline bool numerically_constant(const MobiusMap& m) {
    const double scale = std::abs(m.a) * std::abs(m.d) + std::abs(m.b) * std::abs(m.c);
    // an overflowed product means the determinant is unresolvable a fortiori
    if (!std::isfinite(scale)) return true;
    return std::abs(m.a * m.d - m.b * m.c) <= 1e-10 * scale;
}

inline cplx constant_value(const MobiusMap& m) {
    return std::abs(m.d) >= std::abs(m.c) ? m.b / m.d : m.a / m.c;
}

// ---------------------------------------------------------------------
// Classification of self-maps of the unit disk
// ---------------------------------------------------------------------

enum class MapTag {
    identity,
    elliptic_automorphism,
    parabolic_automorphism,
    parabolic_non_automorphism,
    hyperbolic_automorphism,
    hyperbolic_non_automorphism,
    loxodromic_non_automorphism,
    not_a_self_map,
};

inline const char* to_string(MapTag t) {
    switch (t) {
        case MapTag::identity: return "identity";
        case MapTag::elliptic_automorphism: return "elliptic-automorphism";
        case MapTag::parabolic_automorphism: return "parabolic-automorphism";
        case MapTag::parabolic_non_automorphism: return "parabolic-non-automorphism";
        case MapTag::hyperbolic_automorphism: return "hyperbolic-automorphism";
        case MapTag::hyperbolic_non_automorphism: return "hyperbolic-non-automorphism";
        case MapTag::loxodromic_non_automorphism: return "loxodromic-non-automorphism";
        case MapTag::not_a_self_map: return "not-a-self-map";
    }
    return "?";
}

struct MapClass {
    MapTag tag = MapTag::not_a_self_map;
    std::vector<cplx> fixed_points;  // finite fixed points (up to two)
    bool fixes_infinity = false;     // c ~ 0 puts one fixed point at infinity
    std::optional<cplx> denjoy_wolff;
};

// derivative of a det-1 map: phi'(z) = 1/(cz+d)^2
inline cplx derivative(const MobiusMap& m, cplx z) {
    const cplx den = m.c * z + m.d;
    return 1.0 / (den * den);
}

namespace detail {

inline bool self_map_on_grid(const MobiusMap& m) {
    try {
        if (std::abs(mobius::apply(m, cplx{0.0, 0.0})) > 1.0 + kClassifyTol) return false;
        for (int k = 0; k < kBoundaryGrid; ++k) {
            const double t = 2.0 * M_PI * k / kBoundaryGrid;
            if (std::abs(mobius::apply(m, std::polar(1.0, t))) > 1.0 + kClassifyTol) return false;
        }
    } catch (const std::domain_error&) {
        return false;  // pole met the closed disk
    }
    return true;
}

inline bool automorphism_on_grid(const MobiusMap& m) {
    // a self-map is a disk automorphism iff the boundary circle stays on the circle
    for (int k = 0; k < kBoundaryGrid; ++k) {
        const double t = 2.0 * M_PI * k / kBoundaryGrid;
        if (std::abs(std::abs(mobius::apply(m, std::polar(1.0, t))) - 1.0) > kClassifyTol) return false;
    }
    return true;
}

}  // namespace detail

inline MapClass classify(const MobiusMap& m) {
    MapClass out;
    if (coefficient_distance(m, identity_map()) <= kClassifyTol) {
        out.tag = MapTag::identity;
        return out;
    }
    if (!detail::self_map_on_grid(m)) {
        out.tag = MapTag::not_a_self_map;
        return out;
    }
    const bool autom = detail::automorphism_on_grid(m);

    const double coefscale =
        std::abs(m.a) + std::abs(m.b) + std::abs(m.c) + std::abs(m.d);
    if (std::abs(m.c) <= kClassifyTol * coefscale) {
        // affine self-map: fixed points b/(d-a) and infinity
        if (std::abs(m.d - m.a) <= kClassifyTol * coefscale)
            throw std::domain_error("classify: translation cannot be a disk self-map");
        out.fixes_infinity = true;
        out.fixed_points = {m.b / (m.d - m.a)};
    } else {
        // c z^2 + (d-a) z - b = 0; with det 1 the discriminant is tr^2 - 4
        const cplx tr = m.a + m.d;
        const cplx disc = tr * tr - 4.0;
        const cplx sq = std::sqrt(disc);
        const cplx z1 = (m.a - m.d + sq) / (2.0 * m.c);
        const cplx z2 = (m.a - m.d - sq) / (2.0 * m.c);
        if (std::abs(z1 - z2) <= kClassifyTol) {
            const cplx zp = (m.a - m.d) / (2.0 * m.c);  // double fixed point
            out.fixed_points = {zp};
            out.denjoy_wolff = zp;
            out.tag = autom ? MapTag::parabolic_automorphism
                            : MapTag::parabolic_non_automorphism;
            return out;
        }
        out.fixed_points = {z1, z2};
    }

    // interior fixed point present?
    std::optional<cplx> interior;
    for (const cplx& z : out.fixed_points)
        if (std::abs(z) < 1.0 - kClassifyTol) interior = z;

    if (interior) {
        if (autom) {
            out.tag = MapTag::elliptic_automorphism;  // conjugate to a rotation
        } else {
            out.tag = MapTag::loxodromic_non_automorphism;
            out.denjoy_wolff = *interior;  // attracting: |phi'| < 1 there
        }
        return out;
    }

    // no interior fixed point: hyperbolic type with attracting boundary point
    out.tag = autom ? MapTag::hyperbolic_automorphism : MapTag::hyperbolic_non_automorphism;
    std::optional<cplx> attracting;
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& z : out.fixed_points) {
        if (std::abs(z) > 1.0 + kClassifyTol) continue;  // outside the closed disk
        const double mult = std::abs(derivative(m, z));
        if (mult < best) {
            best = mult;
            attracting = z;
        }
    }
    if (!attracting || best > 1.0 + kClassifyTol)
        throw std::domain_error("classify: no attracting boundary fixed point found");
    out.denjoy_wolff = attracting;
    return out;
}

// ---------------------------------------------------------------------
// The parabolic non-automorphism family and its kernel data
// ---------------------------------------------------------------------

struct ParabolicParam {
    cplx a;        // Re a > 0
    long long n;   // family index, n >= 1
};

inline void check_param(const ParabolicParam& p) {
    if (!(p.a.real() > 0.0))
        throw std::invalid_argument("parabolic family: Re a must be positive");
    if (p.n < 1) throw std::invalid_argument("parabolic family: n must be >= 1");
}

inline MobiusMap parabolic_family(const ParabolicParam& p) {
    check_param(p);
    const cplx na = static_cast<double>(p.n) * p.a;
    return make_map(2.0 - na, na, -na, 2.0 + na);
}

struct KernelParams {
    cplx gamma_bar;  // (na-2)/(na)
    cplx alpha_bar;  // 4/(na(na+2))
    cplx w_bar;      // na/(na+2)
    cplx phi0;       // gamma_bar + alpha_bar = na/(na+2)
};

inline KernelParams kernel_params(const ParabolicParam& p) {
    check_param(p);
    const cplx na = static_cast<double>(p.n) * p.a;
    KernelParams k;
    k.gamma_bar = (na - 2.0) / na;
    k.alpha_bar = 4.0 / (na * (na + 2.0));
    k.w_bar = na / (na + 2.0);
    k.phi0 = na / (na + 2.0);
    return k;
}

// phi_n^{(k)}(0) = k! * (4/(na+2)^2) * (na/(na+2))^{k-1}
inline cplx derivative_at_zero(const ParabolicParam& p, int k) {
    check_param(p);
    if (k < 1) throw std::invalid_argument("derivative_at_zero: k must be >= 1");
    const cplx na = static_cast<double>(p.n) * p.a;
    const cplx first = 4.0 / ((na + 2.0) * (na + 2.0));
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return fact * first * std::pow(na / (na + 2.0), k - 1);
}

// Taylor coefficients at 0 of a map whose pole -d/c lies outside the closed
// disk: (az+b)/(cz+d) = (b/d) + sum_{k>=1} q^{k-1} (a + b q)/d * z^k with
// q = -c/d. The dropped tail is geometric with ratio |q|.
inline std::vector<cplx> taylor_coeffs(const MobiusMap& m, int N) {
    if (N < 0) throw std::invalid_argument("taylor_coeffs: N must be >= 0");
    std::vector<cplx> c(static_cast<std::size_t>(N) + 1, cplx{0.0, 0.0});
    const double coefscale =
        std::abs(m.a) + std::abs(m.b) + std::abs(m.c) + std::abs(m.d);
    if (std::abs(m.c) <= 1e-15 * coefscale) {
        c[0] = m.b / m.d;
        if (N >= 1) c[1] = m.a / m.d;
        return c;
    }
    if (std::abs(m.d) <= std::abs(m.c))
        throw std::domain_error("taylor_coeffs: pole lies in the closed unit disk");
    const cplx q = -m.c / m.d;
    c[0] = m.b / m.d;
    const cplx head = (m.a + m.b * q) / m.d;
    cplx qpow = 1.0;
    for (int k = 1; k <= N; ++k) {
        c[static_cast<std::size_t>(k)] = head * qpow;
        qpow *= q;
    }
    return c;
}

}  // namespace recurlab::mobius
