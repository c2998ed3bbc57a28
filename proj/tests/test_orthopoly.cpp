#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "zsqm/orthopoly.hpp"
#include "zsqm/quadrature.hpp"
#include "zsqm/specfun.hpp"

using namespace zsqm::orthopoly;
using zsqm::quadrature::gauss_legendre_composite;
using zsqm::quadrature::integrate;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("riemann weight moments") {
    // (1 - 2^{-m-n-alpha}) Gamma(1+m+n+alpha) zeta(1+m+n+alpha) at (0,0,1)
    // equals Gamma(2) eta(2) = pi^2/12
    CHECK(std::abs(moment_riemann_weight(0, 0, 1.0) - kPi * kPi / 12.0) < 1e-12);
    // ratio mu(1,0,1)/mu(0,0,1) is the reference B1
    CHECK(std::abs(moment_riemann_weight(1, 0, 1.0) / moment_riemann_weight(0, 0, 1.0) -
                   2.19229) < 1e-5);
    // large-degree growth: Gamma(1+m+n+alpha), zeta -> 1
    const double m20 = moment_riemann_weight(10, 10, 1.0);
    CHECK(std::abs(m20 / std::tgamma(22.0) - 1.0) < 1e-6);
    // quadrature cross-check of the closed form at (2, 1, 1)
    const double quad = integrate(
        [](double y) { return std::pow(y, 3.0 + 1.0) * std::exp(-y) / (1.0 + std::exp(-y)); },
        0.0, 80.0, 1e-12);
    CHECK(std::abs(quad - moment_riemann_weight(2, 1, 1.0)) < 1e-9);
    CHECK_THROWS_AS(moment_riemann_weight(0, 0, -1.5), std::domain_error);
}

TEST_CASE("matrix weight moments vs quadrature") {
    for (int k : {0, 1, 3, 5}) {
        const double quad = integrate(
            [&](double y) {
                const double u = std::exp(-0.5 * y);
                return std::pow(y, k) * std::exp(-y) / ((1.0 + u) * (1.0 + u));
            },
            0.0, 100.0, 1e-13);
        CHECK(std::abs(quad - moment_matrix_weight(k)) < 1e-9 * (1.0 + quad));
    }
}

TEST_CASE("gram-schmidt: zeta weight alpha = 1 reproduces the printed block") {
    const auto gs = gram_schmidt_recurrence(WeightSpec::riemann(1.0), 4);
    CHECK(std::abs(gs.rec.B[1] - 2.19229) < 1e-4);
    CHECK(std::abs(gs.rec.B[2] - 4.09567) < 1e-4);
    CHECK(std::abs(gs.rec.B[3] - 6.07169) < 1e-4);
    CHECK(std::abs(gs.rec.C[2] - 2.10259) < 1e-4);
    CHECK(std::abs(gs.rec.C[3] - 6.14983) < 1e-4);
    // R2 = y^2 - 6.28796 y + 6.87631, R3 constant -28.2686
    CHECK(std::abs(gs.polys[2][0] - 6.87631) < 1e-3);
    CHECK(std::abs(gs.polys[2][1] - (-6.28796)) < 1e-3);
    CHECK(std::abs(gs.polys[3][0] - (-28.2686)) < 1e-3);
    CHECK(std::abs(gs.polys[3][1] - 38.905) < 1e-3);
    CHECK(std::abs(gs.polys[3][2] - (-12.3597)) < 1e-3);
    for (double h : gs.rec.h) CHECK(h > 0.0);
}

TEST_CASE("gram-schmidt: matrix-integral weight block") {
    const auto gs = gram_schmidt_recurrence(WeightSpec::matrix_integral(), 4);
    CHECK(std::abs(gs.rec.B[1] - 1.33908) < 1e-4);
    CHECK(std::abs(gs.rec.B[2] - 3.32937) < 1e-4);
    CHECK(std::abs(gs.rec.B[3] - 5.23886) < 1e-4);
    CHECK(std::abs(gs.rec.C[2] - 1.48211) < 1e-4);
    CHECK(std::abs(gs.rec.C[3] - 4.61963) < 1e-4);
    CHECK(std::abs(gs.polys[2][0] - 2.97619) < 1e-3);
    CHECK(std::abs(gs.polys[2][1] - (-4.66845)) < 1e-3);
    CHECK(std::abs(gs.polys[3][0] - (-9.40578)) < 1e-3);
    CHECK(std::abs(gs.polys[3][1] - 22.8139) < 1e-3);
    CHECK(std::abs(gs.polys[3][2] - (-9.90732)) < 1e-3);
    // norms: h0, h2, h3 match the printed values; the printed h1 = .52531
    // contradicts the same block's C2 = h1/h0 (true value 0.572531); the
    // self-consistent value is asserted and the misprint distance recorded.
    CHECK(std::abs(gs.rec.h[0] - 0.386294) < 1e-5);
    CHECK(std::abs(gs.rec.h[1] - 0.5725313) < 1e-5);
    CHECK(std::abs(gs.rec.h[1] - gs.rec.C[2] * gs.rec.h[0]) < 1e-10);
    CHECK(std::abs(gs.rec.h[1] - 0.52531) > 0.04);
    CHECK(std::abs(gs.rec.h[2] - 2.64488) < 1e-4);
    CHECK(std::abs(gs.rec.h[3] - 25.5684) < 1e-3);
}

TEST_CASE("gram-schmidt: generic quadrature weight agrees with closed form") {
    auto w = [](double y) {
        const double u = std::exp(-0.5 * y);
        return std::exp(-y) / ((1.0 + u) * (1.0 + u));
    };
    const auto a = gram_schmidt_recurrence(WeightSpec::generic(w, 0.0, 100.0), 3);
    const auto b = gram_schmidt_recurrence(WeightSpec::matrix_integral(), 3);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(a.rec.B[k] - b.rec.B[k]) < 1e-7);
    CHECK(std::abs(a.rec.C[2] - b.rec.C[2]) < 1e-7);
}

TEST_CASE("orthogonality of constructed families up to degree 8") {
    for (auto weight : {WeightSpec::riemann(1.0), WeightSpec::matrix_integral()}) {
        const auto gs = gram_schmidt_recurrence(weight, 8);
        const auto table = build_moments(weight, 17);
        auto inner = [&](const PolynomialCoeffs& p, const PolynomialCoeffs& q) {
            double s = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < q.size(); ++j) s += p[i] * q[j] * table.mu[i + j];
            return s;
        };
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; n < m; ++n)
                CHECK(std::abs(inner(gs.polys[m], gs.polys[n])) <
                      1e-6 * std::sqrt(gs.rec.h[m] * gs.rec.h[n]));
        // h_k = <R_k, R_k>
        for (int k = 0; k <= 8; ++k)
            CHECK(std::abs(inner(gs.polys[k], gs.polys[k]) - gs.rec.h[k]) <
                  1e-8 * gs.rec.h[k]);
    }
}

TEST_CASE("jacobi matrix: hermite pattern and zeta families") {
    // Hermite (alpha_n = 0, beta_n = n): eigenvalues symmetric about 0
    RecurrenceCoefficients herm;
    herm.B = {0.0, 0.0, 0.0, 0.0};
    herm.C = {0.0, 0.0, 1.0, 2.0};
    herm.h = {1.0, 1.0, 2.0, 6.0};
    const auto jm = jacobi_matrix(herm, 3);
    const auto ev = jacobi_eigenvalues(jm);
    CHECK(std::abs(ev[0] + ev[2]) < 1e-12);
    CHECK(std::abs(ev[1]) < 1e-12);

    // Laguerre alpha: diagonal entries 2k+1+alpha; monic recurrence
    // B_k = 2(k-1)+1+alpha, C_k = (k-1)(k-1+alpha)
    const double alpha = 1.5;
    RecurrenceCoefficients lag;
    lag.B.assign(5, 0.0);
    lag.C.assign(5, 0.0);
    lag.h.assign(5, 1.0);
    for (int k = 1; k <= 4; ++k) lag.B[k] = 2.0 * (k - 1) + 1.0 + alpha;
    for (int k = 2; k <= 4; ++k) lag.C[k] = (k - 1.0) * (k - 1.0 + alpha);
    const auto jl = jacobi_matrix(lag, 4);
    for (int k = 0; k < 4; ++k) CHECK(jl.diag[k] == 2.0 * k + 1.0 + alpha);

    // char poly equals the stored polynomial; roots real and interlacing
    const auto gs = gram_schmidt_recurrence(WeightSpec::riemann(1.0), 8);
    for (int m = 2; m <= 8; ++m) CHECK(char_poly_check(gs.rec, gs.polys, m) < 1e-3);
    for (int m = 2; m <= 8; ++m) {
        const auto lo = jacobi_eigenvalues(jacobi_matrix(gs.rec, m - 1));
        const auto hi = jacobi_eigenvalues(jacobi_matrix(gs.rec, m));
        for (int i = 0; i + 1 < m; ++i) {
            CHECK(hi[i] < lo[i]);
            CHECK(lo[i] < hi[i + 1]);
        }
        // roots of R_m indeed zero the polynomial
        for (double r : hi) CHECK(std::abs(eval_poly(gs.polys[m], r)) < 1e-5 * gs.rec.h[m]);
    }
    // riemann alpha=1, m=2: char poly at x=0 is the R2 constant
    CHECK(std::abs((0.0 - gs.rec.B[1]) * (0.0 - gs.rec.B[2]) - gs.rec.C[2] - 6.87631) < 1e-3);
}

TEST_CASE("partition functions") {
    CHECK(std::abs(partition_gaussian(1, 1) - std::sqrt(2.0 * kPi)) < 1e-14);
    CHECK(std::abs(partition_gaussian(3, 1) - 2.0 * std::pow(2.0 * kPi, 1.5)) < 1e-12);
    // Penner: product route vs Barnes route, integer alpha grid
    for (int n = 1; n <= 6; ++n) {
        for (int a = 1; a <= 6; ++a) {
            const int N = 2;
            const double gamma = -static_cast<double>(N) / a;
            const double zp = partition_penner_product(n, N, gamma);
            const double zb = partition_penner_barnes(n, N, gamma);
            CHECK(std::abs(zp - zb) / zb < 1e-10);
        }
    }
    // n = 2, alpha = 1: 2! * h0 h1 = 2 * [1^{-2} 0! G(2)] [1^{-4} 1! G(3)]
    const double expect = 2.0 * (1.0 * 1.0) * (1.0 * 2.0);
    CHECK(std::abs(partition_penner_product(2, 2, -2.0) - expect) < 1e-12);
    CHECK_THROWS_AS(partition_penner_product(2, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(partition_penner_barnes(2, 2, -0.8), std::domain_error);
}

TEST_CASE("two-matrix gaussian: the integer list, exactly") {
    const auto rs = two_matrix_biorthogonal(TwoMatrixPrepotential::gaussian, 9);
    const double expect[10][10] = {
        {1},
        {0, 1},
        {-2, 0, 1},
        {0, -6, 0, 1},
        {12, 0, -12, 0, 1},
        {0, 60, 0, -20, 0, 1},
        {-120, 0, 180, 0, -30, 0, 1},
        {0, -840, 0, 420, 0, -42, 0, 1},
        {1680, 0, -3360, 0, 840, 0, -56, 0, 1},
        {0, 15120, 0, -10080, 0, 1512, 0, -72, 0 /*t^9*/},
    };
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n && k <= 8; ++k)
            CHECK(std::abs(rs[n][k] - expect[n][k]) < 1e-8);
    CHECK(std::abs(rs[9][9] - 1.0) < 1e-15);
}

TEST_CASE("two-matrix gaussian: regularized pairing vanishes for m < n") {
    // For the Gaussian prepotential the Fourier-regularized pairing is exact
    // (P(u) + P(iu) = 0); general prepotentials are covered by the
    // dual-weight quadrature identity below.
    const auto rs = two_matrix_biorthogonal(TwoMatrixPrepotential::gaussian, 9);
    for (int n = 1; n <= 9; ++n) {
        const double self = std::abs(two_matrix_pairing(TwoMatrixPrepotential::gaussian, n, rs[n]));
        for (int m = 0; m < n; ++m)
            CHECK(std::abs(two_matrix_pairing(TwoMatrixPrepotential::gaussian, m, rs[n])) <
                  1e-10 * (1.0 + self));
    }
}

TEST_CASE("two-matrix xi_scaled: independent dual-weight quadrature route") {
    // R_n(t) = int w(s) (t + is)^n ds / int w(s) ds with w(s) the Fourier
    // transform of e^{-V0}: for the scaled Xi prepotential that is
    // xi(1/2 + i s/sqrt(lambda)) up to a constant. Only even powers
    // contribute; the quadrature is an entirely separate code path.
    // e^{-P(u)} = Phi(u/sqrt(lam))/Phi(0), so its transform is
    // sqrt(lam) xi(1/2 + i s sqrt(lam)) / Phi(0); constants cancel in mu_j/mu_0
    const double lam = 9.36345;
    auto w = [&](double s) {
        return zsqm::specfun::riemann_xi({0.5, s * std::sqrt(lam)}).real();
    };
    std::vector<double> mu(10, 0.0);
    for (int j = 0; j <= 9; ++j)
        mu[j] = gauss_legendre_composite(
            [&](double s) { return w(s) * std::pow(s, j); }, -16.0, 16.0, 160);
    const auto rs = two_matrix_biorthogonal(TwoMatrixPrepotential::xi_scaled, 6);
    for (int n = 2; n <= 6; ++n) {
        for (double t : {0.0, 0.8, 1.9}) {
            // binomial moment polynomial: sum C(n,k) t^k i^{n-k} mu_{n-k}
            double val = 0.0;
            double binom = 1.0;
            for (int k = n; k >= 0; --k) {
                if ((n - k) % 2 == 0) {
                    const double sign = ((n - k) / 2) % 2 ? -1.0 : 1.0;
                    val += binom * std::pow(t, k) * sign * mu[n - k] / mu[0];
                }
                binom = binom * k / (n - k + 1.0);
            }
            const double direct = eval_poly(rs[n], t);
            CHECK(std::abs(val - direct) < 2e-3 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("two-matrix xi_scaled: printed coefficients where self-consistent") {
    const auto rs = two_matrix_biorthogonal(TwoMatrixPrepotential::xi_scaled, 9);
    // values driven by the quadratic/quartic coefficients match the printed
    // list tightly
    CHECK(std::abs(rs[4][0] - 10.3688) < 1e-3);
    CHECK(std::abs(rs[4][2] - (-12.0)) < 1e-4); // printed scaling constant is 6-digit
    CHECK(std::abs(rs[5][1] - 51.844) < 5e-3);
    CHECK(std::abs(rs[6][2] - 155.532) < 0.08);
    CHECK(std::abs(rs[7][3] - 362.908) < 0.2);
    CHECK(std::abs(rs[9][5] - 1306.47) < 0.7);
    // sixth-order-driven values: within 1e-2 relative of the printed ones
    CHECK(std::abs(rs[6][0] - (-69.229)) / 69.229 < 1e-2);
    CHECK(std::abs(rs[7][1] - (-484.603)) / 484.603 < 1e-2);
    CHECK(std::abs(rs[8][2] - (-1938.41)) / 1938.41 < 1e-2);
    CHECK(std::abs(rs[9][3] - (-5815.24)) / 5815.24 < 1e-2);
    // eighth-order-driven values: the printed 280.027 / 2520.24 descend from
    // the misprinted series coefficient 3.84 (true 6.054...); the true values
    // are ~5% away and pinned here
    CHECK(std::abs(rs[8][0] - 265.51) < 0.15);
    CHECK(std::abs(rs[9][1] - 2389.6) < 1.5);
    CHECK(std::abs(rs[8][0] - 280.027) / 280.027 > 0.04);
}

TEST_CASE("hermite-airy gap decays") {
    const double g100 = hermite_airy_check(100, 0.0);
    const double g200 = hermite_airy_check(200, 0.0);
    const double g400 = hermite_airy_check(400, 0.0);
    CHECK(g100 < 0.08);
    CHECK(g200 < g100);
    CHECK(g400 < g200);
    const double u1 = hermite_airy_check(100, 1.0);
    const double u2 = hermite_airy_check(400, 1.0);
    CHECK(u2 < u1);
}

TEST_CASE("laguerre-bessel gap decays") {
    CHECK(laguerre_bessel_check(200, 0.0, 1.0) < 0.02);
    const double g100 = laguerre_bessel_check(100, 0.0, 1.0);
    const double g200 = laguerre_bessel_check(200, 0.0, 1.0);
    CHECK(g100 / g200 > 1.0);
    CHECK(laguerre_bessel_check(200, 1.0, 2.0) < 0.05);
}

TEST_CASE("sho basis coefficients of Phi") {
    const double momega = 18.7269; // matched to twice the quadratic coefficient
    const auto a = sho_basis_coefficients(20, momega);
    // odd coefficients vanish (Phi even)
    for (int n = 1; n <= 19; n += 2) CHECK(std::abs(a[n]) < 1e-10);
    // golden a0 from the tanh-sinh oracle at this m*omega
    CHECK(std::abs(a[0] - 0.565143300018) < 1e-9);
    // L2 reconstruction: tail energy below 1e-6 of |Phi|^2
    const double norm2 = 0.31975181196162129;
    double acc = 0.0;
    for (int n = 0; n <= 20; ++n) acc += a[n] * a[n];
    CHECK(std::abs(1.0 - acc / norm2) < 1e-6);
}

TEST_CASE("hankel conditioning guard") {
    // nearly dependent moments: mu_j = 1 for all j (rank-1 Hankel)
    MomentTable t;
    t.mu.assign(9, 1.0);
    CHECK_THROWS_AS(t.require_hankel_positive(4), std::runtime_error);
}
