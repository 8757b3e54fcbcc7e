#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "recurlab/mobius.hpp"
#include "recurlab/numdiff.hpp"

using namespace recurlab::mobius;
namespace mobius = recurlab::mobius;
using recurlab::numdiff::cauchy_derivative;

namespace {

// distance of the n-th iterate orbit of z0 to the expected attracting point
std::vector<double> orbit_distances(const MobiusMap& m, cplx z0, cplx target, int horizon) {
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(horizon));
    MobiusMap acc = m;
    for (int n = 1; n <= horizon; ++n) {
        d.push_back(std::abs(mobius::apply(acc, z0) - target));
        acc = compose(acc, m);
    }
    return d;
}

void require_attraction(const MobiusMap& m, cplx z0, cplx target, int horizon) {
    const auto d = orbit_distances(m, z0, target, horizon);
    REQUIRE(d.back() < 1e-3);
    for (std::size_t n = d.size() / 2; n + 1 < d.size(); ++n)
        REQUIRE(d[n + 1] <= d[n] + 1e-12);
}

}  // namespace

TEST_CASE("coefficient records are determinant normalized") {
    const MobiusMap ms[] = {
        make_map({2.0, 0.0}, {0.5, 0.0}, {0.5, 0.0}, {1.0, 0.0}),
        make_map({0.0, 2e5}, {3.0, 0.0}, {7.0, 0.0}, {4e-3, 0.0}),
        make_map({1e-6, 0.0}, {0.0, -3.0}, {2.0, 2.0}, {0.0, 5e4}),
        parabolic_family({{1.0, 1.0}, 17}),
    };
    for (const auto& m : ms) REQUIRE(std::abs(m.a * m.d - m.b * m.c - 1.0) <= 1e-14);
}

TEST_CASE("degenerate coefficients are rejected") {
    REQUIRE_THROWS_AS(make_map(1.0, 2.0, 2.0, 4.0), std::invalid_argument);
    REQUIRE_THROWS_AS(make_map(0.0, 0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("coefficient distance ignores the global sign") {
    const MobiusMap m = make_map(1.0, 0.5, 0.5, 1.0);
    const MobiusMap neg{-m.a, -m.b, -m.c, -m.d};
    REQUIRE(coefficient_distance(m, neg) == 0.0);
    REQUIRE(coefficient_distance(m, identity_map()) > 0.1);
}

TEST_CASE("apply refuses the pole") {
    const MobiusMap inv = make_map(0.0, 1.0, 1.0, 0.0);  // z -> 1/z
    REQUIRE_THROWS_AS(mobius::apply(inv, cplx{0.0, 0.0}), std::domain_error);
    REQUIRE(std::abs(mobius::apply(inv, cplx{2.0, 0.0}) - 0.5) < 1e-15);
}

TEST_CASE("iterate is a matrix power") {
    const MobiusMap m = make_map({0.9, 0.1}, {0.05, 0.0}, {0.02, 0.0}, {1.1, -0.2});
    MobiusMap slow = identity_map();
    for (int i = 0; i < 11; ++i) slow = compose(slow, m);
    REQUIRE(coefficient_distance(iterate(m, 11), slow) < 1e-13);
    REQUIRE(coefficient_distance(iterate(m, 0), identity_map()) == 0.0);
    REQUIRE_THROWS_AS(iterate(m, -1), std::invalid_argument);
}

TEST_CASE("family obeys the exact one-parameter law") {
    for (const cplx a : {cplx{1.0, 0.0}, cplx{1.0, 1.0}, cplx{0.3, 2.0}}) {
        const MobiusMap step = parabolic_family({a, 1});
        for (long long n : {2LL, 5LL, 8LL, 33LL})
            REQUIRE(coefficient_distance(iterate(step, n), parabolic_family({a, n})) < 1e-10);
    }
}

TEST_CASE("family parameter validation") {
    REQUIRE_THROWS_AS(parabolic_family({{-1.0, 0.5}, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(parabolic_family({{0.0, 1.0}, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(parabolic_family({{1.0, 0.0}, 0}), std::invalid_argument);
}

TEST_CASE("kernel form reproduces the map on a disk grid") {
    const ParabolicParam ps[] = {{{1.0, 0.0}, 1}, {{1.0, 1.0}, 3}, {{0.3, 2.0}, 7}};
    for (const auto& p : ps) {
        const MobiusMap m = parabolic_family(p);
        const KernelParams k = kernel_params(p);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const cplx z = std::polar(0.09 * (i + 1), 2.0 * M_PI * j / 10.0);
                const cplx lhs = mobius::apply(m, z);
                const cplx rhs = k.gamma_bar + k.alpha_bar / (1.0 - k.w_bar * z);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        REQUIRE(worst <= 1e-12);
        REQUIRE(std::abs(k.phi0 - mobius::apply(m, cplx{0.0, 0.0})) <= 1e-14);
        REQUIRE(std::abs(k.gamma_bar + k.alpha_bar - k.phi0) <= 1e-14);
    }
}

TEST_CASE("derivatives at the origin match the Taylor record") {
    const ParabolicParam p{{1.0, 1.0}, 4};
    const MobiusMap m = parabolic_family(p);
    const auto c = taylor_coeffs(m, 8);
    double fact = 1.0;
    for (int k = 1; k <= 6; ++k) {
        fact *= k;
        const cplx want = derivative_at_zero(p, k);
        REQUIRE(std::abs(fact * c[static_cast<std::size_t>(k)] - want) <= 1e-12 * std::abs(want));
    }
    REQUIRE(std::abs(derivative(m, 0.0) - derivative_at_zero(p, 1)) <= 1e-13);
    REQUIRE_THROWS_AS(derivative_at_zero(p, 0), std::invalid_argument);
}

TEST_CASE("derivative agrees with a sampled stencil") {
    const MobiusMap m = parabolic_family({{1.0, 0.0}, 2});
    const cplx num = cauchy_derivative([&](cplx z) { return mobius::apply(m, z); }, 1);
    REQUIRE(std::abs(num - derivative(m, 0.0)) <= 1e-12);
}

TEST_CASE("Taylor coefficients are the geometric expansion") {
    const MobiusMap m = make_map(1.0, 0.5, 0.5, 1.0);
    const auto c = taylor_coeffs(m, 10);
    REQUIRE(std::abs(c[0] - 0.5) <= 1e-15);
    for (int k = 1; k <= 10; ++k) {
        const cplx want = 0.75 * std::pow(cplx{-0.5, 0.0}, k - 1);
        REQUIRE(std::abs(c[static_cast<std::size_t>(k)] - want) <= 1e-14);
    }

    const MobiusMap affine = make_map(0.5, 0.3, 0.0, 1.0);
    const auto ca = taylor_coeffs(affine, 4);
    REQUIRE(std::abs(ca[0] - 0.3) <= 1e-15);
    REQUIRE(std::abs(ca[1] - 0.5) <= 1e-15);
    REQUIRE(std::abs(ca[2]) + std::abs(ca[3]) + std::abs(ca[4]) == 0.0);

    // pole on the unit circle is out of range
    REQUIRE_THROWS_AS(taylor_coeffs(make_map(0.0, 1.0, -1.0, 1.0), 4), std::domain_error);
}

TEST_CASE("classification taxonomy") {
    SECTION("identity") {
        REQUIRE(classify(identity_map()).tag == MapTag::identity);
    }
    SECTION("rotation is elliptic") {
        const auto cls = classify(make_map(std::polar(1.0, 1.0), 0.0, 0.0, 1.0));
        REQUIRE(cls.tag == MapTag::elliptic_automorphism);
        REQUIRE(cls.fixes_infinity);
        REQUIRE(cls.fixed_points.size() == 1);
        REQUIRE(std::abs(cls.fixed_points[0]) <= 1e-12);
        REQUIRE_FALSE(cls.denjoy_wolff.has_value());
    }
    SECTION("contraction toward an interior point") {
        const auto cls = classify(make_map(1.0, 0.0, 0.0, 2.0));  // z -> z/2
        REQUIRE(cls.tag == MapTag::loxodromic_non_automorphism);
        REQUIRE(cls.denjoy_wolff.has_value());
        REQUIRE(std::abs(*cls.denjoy_wolff) <= 1e-12);
    }
    SECTION("boundary-attracting automorphism") {
        const auto cls = classify(make_map(1.0, 0.5, 0.5, 1.0));
        REQUIRE(cls.tag == MapTag::hyperbolic_automorphism);
        REQUIRE(cls.denjoy_wolff.has_value());
        REQUIRE(std::abs(*cls.denjoy_wolff - 1.0) <= 1e-9);
    }
    SECTION("boundary-attracting non-automorphism") {
        const auto cls = classify(make_map(1.0, 1.0, 0.0, 2.0));  // z -> (z+1)/2
        REQUIRE(cls.tag == MapTag::hyperbolic_non_automorphism);
        REQUIRE(cls.fixes_infinity);
        REQUIRE(std::abs(*cls.denjoy_wolff - 1.0) <= 1e-9);
    }
    SECTION("double fixed point, boundary circle preserved") {
        const auto cls = classify(make_map({-1.0, 2.0}, 1.0, -1.0, {1.0, 2.0}));
        REQUIRE(cls.tag == MapTag::parabolic_automorphism);
        REQUIRE(std::abs(*cls.denjoy_wolff - 1.0) <= 1e-9);
    }
    SECTION("double fixed point, circle moved inward") {
        const auto cls = classify(parabolic_family({{1.0, 0.0}, 2}));
        REQUIRE(cls.tag == MapTag::parabolic_non_automorphism);
        REQUIRE(std::abs(*cls.denjoy_wolff - 1.0) <= 1e-9);
    }
    SECTION("maps leaving the disk are flagged") {
        REQUIRE(classify(make_map(2.0, 0.0, 0.0, 1.0)).tag == MapTag::not_a_self_map);
        REQUIRE(classify(make_map(1.0, 1.0, 0.0, 1.0)).tag == MapTag::not_a_self_map);
    }
}

TEST_CASE("orbits settle on the attracting point") {
    const cplx starts[] = {{0.0, 0.0}, {0.0, 0.5}};
    for (const cplx z0 : starts) {
        // geometric rates
        require_attraction(make_map(1.0, 0.0, 0.0, 2.0), z0, {0.0, 0.0}, 60);
        require_attraction(make_map(1.0, 1.0, 0.0, 2.0), z0, {1.0, 0.0}, 60);
        require_attraction(make_map(1.0, 0.5, 0.5, 1.0), z0, {1.0, 0.0}, 60);
        // double fixed points pull only like 1/n, so the horizon is longer
        require_attraction(parabolic_family({{1.0, 0.0}, 1}), z0, {1.0, 0.0}, 5000);
        require_attraction(make_map({-1.0, 2.0}, 1.0, -1.0, {1.0, 2.0}), z0, {1.0, 0.0}, 5000);
    }
}
