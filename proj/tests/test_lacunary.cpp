#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "recurlab/lacunary.hpp"

using namespace recurlab::lacunary;

TEST_CASE("coefficient growth") {
    REQUIRE(coefficient(0, 1.0) == 1.0);
    REQUIRE(std::abs(coefficient(1, 1.0) - std::sqrt(2.0)) <= 1e-15);
    REQUIRE(std::abs(coefficient(3, 2.0) - 4.0) <= 1e-14);
}

TEST_CASE("greedy exponent selection") {
    REQUIRE(select_exponents(1.0, 0.2, 4) == std::vector<long long>{2, 64, 2048, 65536});
    REQUIRE(select_exponents(0.5, 0.2, 4) ==
            std::vector<long long>{2, 1024, 1048576, 1073741824});
    REQUIRE(select_exponents(2.0, 0.2, 4) == std::vector<long long>{2, 64, 2048, 65536});

    // the second choice for nu = 2 is genuinely minimal: 16 and 32 both fail
    REQUIRE_FALSE(detail::admissible({2}, 16, 2.0, 0.2));
    REQUIRE_FALSE(detail::admissible({2}, 32, 2.0, 0.2));
    REQUIRE(detail::admissible({2}, 64, 2.0, 0.2));

    REQUIRE_THROWS_AS(select_exponents(0.0, 0.2, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(select_exponents(1.0, 1.0, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(select_exponents(1.0, 0.2, 0), std::invalid_argument);
    // the third nu = 1/2 exponent is 2^20, beyond a 2^18 cap
    REQUIRE_THROWS_AS(select_exponents(0.5, 0.2, 3, 18), std::runtime_error);
}

TEST_CASE("evaluation keeps huge phases exact") {
    const std::vector<long long> single{1LL << 40};
    const auto v = eval_log(single, 0.0, 0.0, Angle{1, 3});
    // 2^40 = 1 (mod 3), so the phase is exactly 2 pi / 3
    REQUIRE(std::abs(v - std::polar(1.0, 2.0 * M_PI / 3.0)) <= 1e-15);

    const auto w = eval_log({1}, 0.0, 0.0, Angle{-1, 3});
    REQUIRE(std::abs(w - std::polar(1.0, -2.0 * M_PI / 3.0)) <= 1e-15);

    const auto r = eval_log({4}, 1.0, std::log(0.5), Angle{0, 1});
    REQUIRE(std::abs(r.real() - std::sqrt(5.0) / 16.0) <= 1e-15);
    REQUIRE(r.imag() == 0.0);

    REQUIRE_THROWS_AS(eval_log({2}, 1.0, 0.1, Angle{0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(eval_log({2}, 1.0, 0.0, Angle{0, 0}), std::invalid_argument);
}

TEST_CASE("norm bookkeeping") {
    const double n2 = norm_square({2, 64}, 1.0);
    REQUIRE(std::abs(n2 - (1.0 / 3.0 + 1.0 / 65.0)) <= 1e-15);
}

TEST_CASE("radial growth is monotone") {
    const auto ms = select_exponents(1.0, 0.2, 4);
    std::vector<double> radii;
    for (int t = 2; t <= 12; ++t) radii.push_back(1.0 - std::pow(2.0, -t));
    const auto vals = radial_values(ms, 1.0, radii);
    for (std::size_t i = 1; i < vals.size(); ++i) REQUIRE(vals[i] > vals[i - 1]);
    REQUIRE_THROWS_AS(radial_values(ms, 1.0, {1.0}), std::invalid_argument);
}

TEST_CASE("one term dominates on its annulus") {
    const auto ms = select_exponents(1.0, 0.2, 4);
    for (int p = 1; p <= 4; ++p) {
        const AnnulusAudit audit = annulus_audit(ms, 1.0, p, 32, 32);
        REQUIRE(audit.ln_r_lo < audit.ln_r_hi);
        REQUIRE(audit.ln_r_hi < 0.0);
        const double expect_floor =
            (p == 1 ? 5.0 / 12.0 : 1.0 / 6.0) * coefficient(ms[static_cast<std::size_t>(p - 1)], 1.0);
        REQUIRE(audit.floor_bound == expect_floor);
        REQUIRE(audit.ok);
        REQUIRE(audit.min_abs >= audit.floor_bound);
        REQUIRE(audit.argmin_ln_r >= audit.ln_r_lo - 1e-15);
        REQUIRE(audit.argmin_ln_r <= audit.ln_r_hi + 1e-15);
    }
    REQUIRE_THROWS_AS(annulus_audit(ms, 1.0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(annulus_audit(ms, 1.0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(annulus_audit(ms, 1.0, 1, 1, 4), std::invalid_argument);
}
