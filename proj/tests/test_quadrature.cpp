#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "zsqm/quadrature.hpp"

using namespace zsqm::quadrature;

TEST_CASE("tanh-sinh: smooth integrands") {
    CHECK(std::abs(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-13) -
                   std::sqrt(std::numbers::pi)) < 1e-12);
    CHECK(std::abs(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -1.0, 1.0, 1e-13) -
                   std::numbers::pi / 2.0) < 1e-12);
}

TEST_CASE("tanh-sinh: endpoint singularity") {
    // int_0^1 1/sqrt(x) dx = 2
    CHECK(std::abs(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12) - 2.0) <
          1e-10);
}

TEST_CASE("config-driven schemes agree") {
    QuadratureConfig ts{Scheme::tanh_sinh, 1e-12, 12, 0.0, 3.0};
    QuadratureConfig gl{Scheme::gauss_legendre_composite, 1e-12, 12, 0.0, 3.0};
    auto f = [](double x) { return std::sin(x) * std::exp(-x); };
    CHECK(std::abs(integrate(f, ts) - integrate(f, gl)) < 1e-12);
}

TEST_CASE("composite GL handles oscillation") {
    // int_0^{10 pi} sin(x) dx = 0; int_0^{pi} sin = 2
    const double a = gauss_legendre_composite([](double x) { return std::sin(x); }, 0.0,
                                              10.0 * std::numbers::pi, 64);
    CHECK(std::abs(a) < 1e-13);
    const double b = gauss_legendre_composite([](double x) { return std::sin(x); }, 0.0,
                                              std::numbers::pi, 8);
    CHECK(std::abs(b - 2.0) < 1e-14);
    const auto c = gauss_legendre_composite_complex(
        [](double x) { return std::complex<double>(std::cos(3.0 * x), std::sin(3.0 * x)); }, 0.0,
        1.0, 16);
    CHECK(std::abs(c - std::complex<double>(std::sin(3.0) / 3.0, (1.0 - std::cos(3.0)) / 3.0)) <
          1e-14);
}

TEST_CASE("tanh-sinh: non-convergence reported") {
    // tolerance beyond double on a nasty kernel
    CHECK_THROWS_AS(integrate([](double x) { return std::cos(1.0 / (x + 1e-13)); }, 0.0, 1.0, 1e-30),
                    std::runtime_error);
}
