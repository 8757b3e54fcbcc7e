#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "recurlab/detect.hpp"

using namespace recurlab::detect;

namespace {

Matrix rotation_pair() {
    Matrix T = Matrix::Zero(2, 2);
    T(0, 0) = std::polar(1.0, 2.0 * M_PI / 8.0);
    T(1, 1) = std::polar(1.0, 2.0 * M_PI * 3.0 / 8.0);
    return T;
}

}  // namespace

TEST_CASE("residual norms") {
    Vector x = Vector::Zero(2);
    Vector y(2);
    y << cplx{3.0, 0.0}, cplx{0.0, 4.0};

    REQUIRE(std::abs(vector_residual(y, x, {}) - 5.0) <= 1e-15);

    NormSpec weighted{NormKind::euclidean_weighted, {1.0, 2.0}, 64};
    REQUIRE(std::abs(vector_residual(y, x, weighted) - std::sqrt(73.0)) <= 1e-14);

    NormSpec sup{NormKind::sup, {}, 64};
    REQUIRE(vector_residual(y, x, sup) == 4.0);

    NormSpec metric{NormKind::product_metric, {}, 64};
    Vector e1 = Vector::Zero(2);
    e1(0) = 1.0;
    REQUIRE(vector_residual(e1, x, metric) == 0.5);
    Vector two = Vector::Zero(2);
    two(0) = 2.0;
    REQUIRE(std::abs(vector_residual(two, x, metric) - 2.0 / 3.0) <= 1e-15);

    Vector bad = Vector::Zero(3);
    REQUIRE_THROWS_AS(vector_residual(bad, x, {}), std::invalid_argument);
}

TEST_CASE("product metric enclosures") {
    using recurlab::product_metric;
    const std::vector<cplx> x{{1.0, 0.0}, {0.0, 0.0}, {4.0, 0.0}};
    const std::vector<cplx> zero;
    const auto tight = product_metric(x, zero, 64);
    REQUIRE(tight.lo == tight.hi);  // support covered, tail exact
    const auto loose = product_metric(x, zero, 2);
    REQUIRE(loose.lo < loose.hi);
    REQUIRE(tight.lo >= loose.lo);
    REQUIRE(tight.hi <= loose.hi);
    REQUIRE_THROWS_AS(product_metric(x, zero, 0), std::invalid_argument);
}

TEST_CASE("operator norms by shape") {
    Matrix D = Matrix::Zero(2, 2);
    D(0, 0) = cplx{0.0, 2.0};
    D(1, 1) = cplx{-3.0, 0.0};
    REQUIRE(is_diagonal(D));
    REQUIRE(operator_norm(D) == 3.0);

    Matrix R(2, 2);  // real rotation: normal, spectrum on the circle
    R << cplx{0.0, 0.0}, cplx{-1.0, 0.0}, cplx{1.0, 0.0}, cplx{0.0, 0.0};
    REQUIRE_FALSE(is_diagonal(R));
    REQUIRE(is_normal(R));
    REQUIRE(std::abs(operator_norm(R) - 1.0) <= 1e-12);

    Matrix N(2, 2);  // nilpotent shift: neither diagonal nor normal
    N << cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0};
    REQUIRE_FALSE(is_normal(N));
    REQUIRE(std::abs(operator_norm(N) - 1.0) <= 1e-10);

    Matrix J(2, 2);  // largest singular value is sqrt((3+sqrt 5)/2)
    J << cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0};
    REQUIRE(std::abs(operator_norm(J) - std::sqrt((3.0 + std::sqrt(5.0)) / 2.0)) <= 1e-9);

    REQUIRE_THROWS_AS(operator_norm(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("orbit returns for a pair of rotations") {
    const Matrix T = rotation_pair();
    Vector x(2);
    x << cplx{1.0, 0.0}, cplx{1.0, 0.0};
    const auto cert = recurrence_search(T, x, 100, 1e-6);
    REQUIRE(cert.found);
    REQUIRE(cert.n == 8);
    REQUIRE(cert.residual <= 1e-12);
    REQUIRE(cert.argmin == 8);
    REQUIRE(cert.improving_residuals.size() >= 2);
    for (std::size_t i = 1; i < cert.improving_residuals.size(); ++i) {
        REQUIRE(cert.improving_ns[i] > cert.improving_ns[i - 1]);
        REQUIRE(cert.improving_residuals[i] < cert.improving_residuals[i - 1]);
    }
    REQUIRE(cert.improving_residuals.back() == cert.min_residual);

    REQUIRE_THROWS_AS(recurrence_search(T, Vector::Zero(3), 10, 1e-6), std::invalid_argument);
    REQUIRE_THROWS_AS(recurrence_search(T, x, 10, 0.0), std::invalid_argument);
}

TEST_CASE("uniform returns of the whole power sequence") {
    const auto cert = uniform_rigidity_search(rotation_pair(), 100, 1e-6);
    REQUIRE(cert.found);
    REQUIRE(cert.n == 8);
    REQUIRE(cert.distance <= 1e-12);

    Matrix grow = Matrix::Identity(1, 1) * 2.0;
    const auto miss = uniform_rigidity_search(grow, 5, 0.5);
    REQUIRE_FALSE(miss.found);
    REQUIRE(miss.min_distance == 1.0);
    REQUIRE(miss.argmin == 1);
}

TEST_CASE("matrix powers") {
    Matrix T(2, 2);
    T << cplx{0.9, 0.1}, cplx{0.2, 0.0}, cplx{0.0, -0.3}, cplx{1.05, 0.0};
    Matrix slow = Matrix::Identity(2, 2);
    for (int i = 0; i < 9; ++i) slow = slow * T;
    REQUIRE((matrix_power(T, 9) - slow).cwiseAbs().maxCoeff() <= 1e-12);
    REQUIRE((matrix_power(T, 0) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE_THROWS_AS(matrix_power(T, -1), std::invalid_argument);
}

TEST_CASE("series bound for inverse powers") {
    Matrix E(2, 2);
    E << cplx{0.10, 0.0}, cplx{0.05, 0.0}, cplx{-0.02, 0.0}, cplx{0.0, 0.08};
    const Matrix T = Matrix::Identity(2, 2) + E;
    const auto chk = neumann_inverse_check(T, 2);
    REQUIRE(chk.forward < 0.5);
    REQUIRE(chk.bound == 2.0 * chk.forward);
    REQUIRE(chk.slack >= 0.0);
    REQUIRE(chk.inverse <= chk.bound);

    REQUIRE_THROWS_AS(neumann_inverse_check(Matrix::Identity(2, 2) * 3.0, 1),
                      std::domain_error);
    REQUIRE_THROWS_AS(neumann_inverse_check(T, 0), std::invalid_argument);
}

TEST_CASE("power boundedness guard") {
    const auto ok = power_bound(rotation_pair(), 50);
    REQUIRE_FALSE(ok.diverged);
    REQUIRE(ok.stopped_at == 50);
    REQUIRE(std::abs(ok.sup - 1.0) <= 1e-12);

    const auto blown = power_bound(Matrix::Identity(1, 1) * 2.0, 100);
    REQUIRE(blown.diverged);
    REQUIRE(blown.stopped_at == 40);  // 2^40 is the first power past 1e12
    REQUIRE(blown.sup > 1e12);
}

TEST_CASE("simultaneous returns of unimodular tuples") {
    SECTION("fourth root of unity returns exactly") {
        const auto res = kronecker_search({cplx{0.0, 1.0}}, 1e-3, 100);
        REQUIRE(res.found);
        REQUIRE(res.n == 4);
        REQUIRE(res.residual == 0.0);
    }
    SECTION("pair with lcm period") {
        const auto res =
            kronecker_search({cplx{0.0, 1.0}, std::polar(1.0, 2.0 * M_PI / 3.0)}, 0.05, 100);
        REQUIRE(res.found);
        REQUIRE(res.n == 12);
    }
    SECTION("golden rotation needs the full best-approximation ladder") {
        const double alpha = (std::sqrt(5.0) - 1.0) / 2.0;
        const auto res = kronecker_search({std::polar(1.0, 2.0 * M_PI * alpha)}, 0.01, 1000000);
        REQUIRE(res.found);
        REQUIRE(res.n == 377);
        REQUIRE(res.residual > 0.0074);
        REQUIRE(res.residual < 0.0075);
    }
    SECTION("validation") {
        REQUIRE_THROWS_AS(kronecker_search({}, 0.1, 10), std::invalid_argument);
        REQUIRE_THROWS_AS(kronecker_search({cplx{1.1, 0.0}}, 0.1, 10), std::invalid_argument);
        REQUIRE_THROWS_AS(kronecker_search({cplx{1.0, 0.0}}, 0.0, 10), std::invalid_argument);
    }
}
