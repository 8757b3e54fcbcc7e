#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recurlab/util.hpp"

// =====================================================================
// Exact arithmetic on the circle R/Z. Sets are finite unions of
// half-open arcs [s, t) with rational endpoints, kept sorted and
// disjoint, so measures, unions and the doubling-map style pre/images
// under t -> n t (mod 1) are computed without any rounding.
//
// On top of that: the fat Cantor construction (remove middles of length
// c/3^k instead of thirds, keeping positive leftover measure
// 2^k |F_{1,k}| = 1 - c(1 - (2/3)^k)), its Cantor-Lebesgue style
// staircase with plateau values (2j-1)/2^t, and the non-return mass of
// the multiplier t -> exp(2 pi i n f(t)) computed exactly from the
// piecewise-affine level-k surrogate.
// =====================================================================

namespace recurlab::circle {

using rat = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline bigint rat_floor(const rat& q) {
    bigint n = numerator(q), d = denominator(q);
    bigint t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline rat rat_frac(const rat& q) { return q - rat(rat_floor(q)); }

inline std::string to_string(const rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

inline double to_double(const rat& q) { return q.convert_to<double>(); }

struct Arc {
    rat lo, hi;  // [lo, hi), 0 <= lo < hi <= 1
};

struct ArcSet {
    std::vector<Arc> arcs;  // sorted by lo, pairwise disjoint, non-adjacent

    static ArcSet normalized(std::vector<Arc> raw) {
        for (const Arc& a : raw)
            if (!(a.lo >= 0 && a.hi <= 1 && a.lo < a.hi))
                throw std::invalid_argument("ArcSet: arcs must satisfy 0 <= lo < hi <= 1");
        std::sort(raw.begin(), raw.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
        ArcSet out;
        for (Arc& a : raw) {
            if (!out.arcs.empty() && a.lo <= out.arcs.back().hi) {
                if (a.hi > out.arcs.back().hi) out.arcs.back().hi = a.hi;
            } else {
                out.arcs.push_back(a);
            }
        }
        return out;
    }

    // endpoints may live anywhere on the line; they are wrapped mod 1
    static ArcSet from_endpoints(const std::vector<std::pair<rat, rat>>& spans) {
        std::vector<Arc> raw;
        for (const auto& [s, t] : spans) {
            if (!(t > s)) throw std::invalid_argument("ArcSet: need t > s");
            if (t - s >= 1) return normalized({{rat(0), rat(1)}});
            rat lo = rat_frac(s);
            rat len = t - s;
            if (lo + len <= 1) {
                raw.push_back({lo, lo + len});
            } else {
                raw.push_back({lo, rat(1)});
                raw.push_back({rat(0), lo + len - 1});
            }
        }
        return normalized(std::move(raw));
    }

    rat measure() const {
        rat m = 0;
        for (const Arc& a : arcs) m += a.hi - a.lo;
        return m;
    }

    bool contains(const rat& x) const {
        for (const Arc& a : arcs)
            if (x >= a.lo && x < a.hi) return true;
        return false;
    }
};

inline ArcSet unite(const ArcSet& A, const ArcSet& B) {
    std::vector<Arc> raw = A.arcs;
    raw.insert(raw.end(), B.arcs.begin(), B.arcs.end());
    return ArcSet::normalized(std::move(raw));
}

inline ArcSet intersect(const ArcSet& A, const ArcSet& B) {
    std::vector<Arc> raw;
    for (const Arc& a : A.arcs)
        for (const Arc& b : B.arcs) {
            const rat lo = std::max(a.lo, b.lo, [](const rat& x, const rat& y) { return x < y; });
            const rat hi = std::min(a.hi, b.hi, [](const rat& x, const rat& y) { return x < y; });
            if (lo < hi) raw.push_back({lo, hi});
        }
    return ArcSet::normalized(std::move(raw));
}

inline ArcSet complement(const ArcSet& A) {
    std::vector<Arc> raw;
    rat cursor = 0;
    for (const Arc& a : A.arcs) {
        if (a.lo > cursor) raw.push_back({cursor, a.lo});
        cursor = a.hi;
    }
    if (cursor < 1) raw.push_back({cursor, rat(1)});
    return ArcSet::normalized(std::move(raw));
}

// ---------------------------------------------------------------------
// the map T_n : t -> n t (mod 1)
// ---------------------------------------------------------------------

// T_n^{-1}(E) = union over k < n of (E + k)/n; measure is preserved.
inline ArcSet preimage(const ArcSet& E, long long n) {
    if (n < 1) throw std::invalid_argument("preimage: n must be >= 1");
    std::vector<Arc> raw;
    for (const Arc& a : E.arcs)
        for (long long k = 0; k < n; ++k)
            raw.push_back({(a.lo + k) / n, (a.hi + k) / n});
    return ArcSet::normalized(std::move(raw));
}

// T_n(E): split E along the sector grid j/n, dilate each piece by n.
inline ArcSet image(const ArcSet& E, long long n) {
    if (n < 1) throw std::invalid_argument("image: n must be >= 1");
    std::vector<Arc> raw;
    for (const Arc& a : E.arcs) {
        bigint j = rat_floor(a.lo * n);
        rat lo = a.lo;
        while (lo < a.hi) {
            const rat sector_hi = rat(j + 1) / n;
            const rat hi = std::min(a.hi, sector_hi, [](const rat& x, const rat& y) { return x < y; });
            raw.push_back({lo * n - rat(j), hi * n - rat(j)});
            lo = hi;
            ++j;
        }
    }
    return ArcSet::normalized(std::move(raw));
}

// running coverage of union_j T_{n_j}(E); nondecreasing, capped at 1
inline std::vector<rat> limsup_coverage(const ArcSet& E, const std::vector<long long>& ns) {
    std::vector<rat> cov;
    ArcSet acc;
    for (long long n : ns) {
        acc = unite(acc, image(E, n));
        cov.push_back(acc.measure());
    }
    return cov;
}

// ---------------------------------------------------------------------
// fat Cantor set: remove middles of length c/3^t
// ---------------------------------------------------------------------

struct FatCantor {
    rat c;
    int k = 0;
    std::vector<Arc> remaining;                  // 2^k pieces, left to right
    std::vector<std::vector<Arc>> removed;       // removed[t-1] = level-t middles
    rat piece_length;                            // |F_{1,k}|, all pieces equal
    rat level_identity_lhs;                      // 2^k |F_{1,k}|
    rat level_identity_rhs;                      // 1 - c (1 - (2/3)^k)
};

inline FatCantor fat_cantor(const rat& c, int k) {
    if (!(c > 0 && c < 1)) throw std::invalid_argument("fat_cantor: need 0 < c < 1");
    if (k < 0) throw std::invalid_argument("fat_cantor: level must be >= 0");
    FatCantor fc;
    fc.c = c;
    fc.k = k;
    fc.remaining = {{rat(0), rat(1)}};
    rat pow3 = 1;
    for (int t = 1; t <= k; ++t) {
        pow3 *= 3;
        const rat gap = c / pow3;
        std::vector<Arc> next;
        std::vector<Arc> middles;
        for (const Arc& piece : fc.remaining) {
            const rat len = piece.hi - piece.lo;
            const rat half = (len - gap) / 2;
            if (!(half > 0)) throw std::domain_error("fat_cantor: removal exceeds piece length");
            const rat mlo = piece.lo + half;
            const rat mhi = mlo + gap;
            middles.push_back({mlo, mhi});
            next.push_back({piece.lo, mlo});
            next.push_back({mhi, piece.hi});
        }
        fc.removed.push_back(std::move(middles));
        fc.remaining = std::move(next);
    }
    fc.piece_length = fc.remaining.front().hi - fc.remaining.front().lo;
    rat two_thirds_k = 1;
    for (int t = 0; t < k; ++t) two_thirds_k = two_thirds_k * 2 / 3;
    bigint twok = bigint(1) << k;
    fc.level_identity_lhs = rat(twok) * fc.piece_length;
    fc.level_identity_rhs = 1 - c * (1 - two_thirds_k);
    return fc;
}

// ---------------------------------------------------------------------
// the staircase function of the fat Cantor set
// ---------------------------------------------------------------------
//
// Plateaus: f = (2j-1)/2^t on the j-th level-t removed middle. On each of the
// 2^k surviving level-k pieces the level-k surrogate interpolates affinely
// onto the dyadic interval [(s-1)/2^k, s/2^k), which matches the plateau
// values at both ends, so the surrogate is continuous and nondecreasing.

struct StaircaseMap {
    FatCantor fc;
    // piece s (0-based) maps [l_s, r_s) onto [s/2^k, (s+1)/2^k)
    rat slope;  // 2^{-k} / |F_{1,k}|

    rat eval(const rat& x) const {
        if (!(x >= 0 && x < 1)) throw std::invalid_argument("staircase eval: x in [0,1)");
        // plateau?
        for (int t = 1; t <= fc.k; ++t) {
            const auto& mids = fc.removed[static_cast<std::size_t>(t - 1)];
            for (std::size_t j = 0; j < mids.size(); ++j)
                if (x >= mids[j].lo && x < mids[j].hi)
                    return rat(2 * bigint(j + 1) - 1) / rat(bigint(1) << t);
        }
        for (std::size_t s = 0; s < fc.remaining.size(); ++s) {
            const Arc& p = fc.remaining[s];
            if (x >= p.lo && x < p.hi)
                return rat(bigint(s)) / rat(bigint(1) << fc.k) + (x - p.lo) * slope;
        }
        throw std::logic_error("staircase eval: point escaped the partition");
    }
};

inline StaircaseMap staircase_map(const rat& c, int k) {
    if (k < 1) throw std::invalid_argument("staircase_map: level must be >= 1");
    StaircaseMap sm{fat_cantor(c, k), rat(0)};
    sm.slope = (rat(1) / rat(bigint(1) << k)) / sm.fc.piece_length;
    return sm;
}

// |T| and |f(T)| for T a sub-collection of level-k pieces; the affine pieces
// give |T| <= |f(T)| <= |T| / (1-c) exactly.
struct DistortionRow {
    rat set_measure;
    rat image_measure;
    bool lower_ok = false;
    bool upper_ok = false;
};

inline DistortionRow distortion(const StaircaseMap& sm, const std::vector<int>& piece_indices) {
    DistortionRow row;
    const bigint twok = bigint(1) << sm.fc.k;
    std::vector<int> seen = piece_indices;
    for (int s : seen)
        if (s < 0 || bigint(s) >= twok)
            throw std::invalid_argument("distortion: piece index out of range");
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    row.set_measure = rat(bigint(seen.size())) * sm.fc.piece_length;
    row.image_measure = rat(bigint(seen.size())) / rat(twok);
    row.lower_ok = row.set_measure <= row.image_measure;
    row.upper_ok = row.image_measure <= row.set_measure / (1 - sm.fc.c);
    return row;
}

// ---------------------------------------------------------------------
// non-return mass of the multiplier exp(2 pi i n f(t))
// ---------------------------------------------------------------------
//
// On the level-k surrogate, n f maps piece s affinely onto [n s/2^k,
// n(s+1)/2^k), so the mass with dist(n f(t), Z) < delta pulls back through
// g(x) = 2 delta floor(x) + min(frac(x), delta) + max(0, frac(x) - (1-delta)),
// the exact measure of {y in [0, x) : dist(y, Z) < delta}.

struct NonReturnReport {
    std::vector<rat> escaping;  // escaping[i] = mass at n = i+1
    rat min_mass;
    long long argmin = 0;
};

namespace detail {
inline rat near_integer_mass(const rat& x, const rat& delta) {
    const bigint fl = rat_floor(x);
    const rat fr = x - rat(fl);
    rat h = fr < delta ? fr : delta;
    const rat thresh = 1 - delta;
    if (fr > thresh) h += fr - thresh;
    return 2 * delta * rat(fl) + h;
}
}  // namespace detail

inline NonReturnReport multiplier_nonreturn(const StaircaseMap& sm, const rat& delta,
                                            long long n_max) {
    if (!(delta > 0 && delta < rat(1, 2)))
        throw std::invalid_argument("multiplier_nonreturn: need 0 < delta < 1/2");
    if (n_max < 1) throw std::invalid_argument("multiplier_nonreturn: n_max must be >= 1");
    const bigint twok = bigint(1) << sm.fc.k;
    const rat piece = sm.fc.piece_length;
    NonReturnReport rep;
    auto mass_at = [&](long long n) -> rat {
        rat good = 0;
        for (bigint s = 0; s < twok; ++s) {
            const rat A = rat(bigint(n) * s) / rat(twok);
            const rat B = rat(bigint(n) * (s + 1)) / rat(twok);
            const rat bad_y = detail::near_integer_mass(B, delta) - detail::near_integer_mass(A, delta);
            // pull back: dt/dy = piece / (n 2^{-k})
            good += piece - bad_y * piece * rat(twok) / rat(bigint(n));
        }
        return good;
    };
    std::vector<rat> values = parallel_map<rat>(
        static_cast<std::size_t>(n_max),
        [&](std::size_t i) { return mass_at(static_cast<long long>(i) + 1); });
    rep.escaping = std::move(values);
    rep.min_mass = rep.escaping.front();
    rep.argmin = 1;
    for (std::size_t i = 1; i < rep.escaping.size(); ++i)
        if (rep.escaping[i] < rep.min_mass) {
            rep.min_mass = rep.escaping[i];
            rep.argmin = static_cast<long long>(i) + 1;
        }
    return rep;
}

}  // namespace recurlab::circle
