#include "zsqm/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include "zsqm/analysis.hpp"
#include "zsqm/orthopoly.hpp"
#include "zsqm/potentials.hpp"
#include "zsqm/quadrature.hpp"
#include "zsqm/specfun.hpp"
#include "zsqm/spectral.hpp"

namespace zsqm::verify {

namespace {

constexpr double kPi = std::numbers::pi;
using potentials::Family;
using potentials::PotentialSpec;

std::string fmt(const char* pattern, double a, double b, double c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

void check_abs(std::vector<CheckResult>& out, const std::string& name, double computed,
               double expected, double tol, const char* note = nullptr) {
    const double delta = std::abs(computed - expected);
    std::string detail = fmt("computed=%.10g expected=%.10g delta=%.3g", computed, expected, delta);
    if (note) detail += std::string(" [") + note + "]";
    out.push_back({name, delta <= tol, std::move(detail)});
}

void check_true(std::vector<CheckResult>& out, const std::string& name, bool ok,
                std::string detail) {
    out.push_back({name, ok, std::move(detail)});
}

CriterionReport criterion1() {
    CriterionReport rep{1, "Morse A=5 grid levels and SWKB inversion", true, {}};
    PotentialSpec morse{Family::Morse, 5.0};
    const auto r = spectral::solve_spectrum(morse, {-4.0, 14.0, 4001}, 5, 1e-3);
    const double expect[] = {0.0, 9.0, 16.0, 21.0, 24.0};
    for (int n = 0; n < 5; ++n)
        check_abs(rep.checks, "grid E" + std::to_string(n), r.eigenvalues[n], expect[n], 1e-3);
    for (int n = 1; n <= 4; ++n) {
        const double E = spectral::morse_exact_energy(5.0, n);
        check_abs(rep.checks, "swkb n" + std::to_string(n), spectral::swkb_quantization(5.0, E),
                  n, 1e-5);
    }
    check_true(rep.checks, "swkb E->0 limit", spectral::swkb_quantization(5.0, 1e-10) < 1e-4,
               "n(E->0+) ~ 0");
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

struct URow {
    Family f;
    const char* name;
    double xm, x2, dx, p2, dp, prod;
    const char* note;
};

CriterionReport criterion2() {
    CriterionReport rep{2, "uncertainty table", true, {}};
    PotentialSpec sho = PotentialSpec::standard(Family::SHO);
    check_abs(rep.checks, "sho product", analysis::uncertainty_product(sho), 0.5, 1e-10);
    const URow rows[] = {
        {Family::Morse, "morse", 1.27036, 3.25876, 1.28255, 0.25, 0.5, 0.641275, nullptr},
        {Family::RiemannI, "riemann1", 0.918522, 2.34964, 1.22717, 0.306513, 0.553637, 0.679408,
         "product: printed .67408 drops a digit of dx*dp"},
        {Family::RiemannII, "riemann2", 0.156371, 0.303422, 0.528176, 1.0771, 1.03783, 0.548158,
         nullptr},
        {Family::XiI, "xi1", 0.0, 0.0245801, 0.15678, 10.2076, 3.19493, 0.500902, nullptr},
        {Family::XiII, "xi2", 0.0, 0.0677675, 0.260322, 3.70515, 1.92488, 0.501088, nullptr},
    };
    for (const auto& row : rows) {
        PotentialSpec spec = PotentialSpec::standard(row.f);
        const auto xm = analysis::position_moments(spec);
        const auto pm = analysis::momentum_moments(spec);
        const std::string n = row.name;
        check_abs(rep.checks, n + " <x>", xm.mean, row.xm, 1e-3);
        check_abs(rep.checks, n + " <x2>", xm.second, row.x2, 1e-3);
        check_abs(rep.checks, n + " dx", xm.spread, row.dx, 1e-3);
        check_abs(rep.checks, n + " <p2>", pm.second, row.p2, 1e-3);
        check_abs(rep.checks, n + " dp", pm.spread, row.dp, 1e-3);
        check_abs(rep.checks, n + " dp*dx", xm.spread * pm.spread, row.prod, 1e-3,
                  row.note ? row.note : nullptr);
    }
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CriterionReport criterion3() {
    CriterionReport rep{3, "shannon entropy table", true, {}};
    const struct {
        Family f;
        const char* name;
        double sx, sp, sum;
    } rows[] = {
        {Family::Morse, "morse", 1.57722, 0.693147, 2.27036},
        {Family::RiemannI, "riemann1", 1.5121, 0.781932, 2.29403},
        {Family::RiemannII, "riemann2", 0.745831, 1.44866, 2.19449},
        {Family::XiI, "xi1", -0.434395, 2.58012, 2.14573},
        {Family::XiII, "xi2", 0.0726135, 2.07331, 2.14593},
    };
    const auto sho = analysis::shannon_entropies(PotentialSpec::standard(Family::SHO));
    check_abs(rep.checks, "sho sum = 1 + log pi", sho.sum, 1.0 + std::log(kPi), 1e-9);
    for (const auto& row : rows) {
        const auto e = analysis::shannon_entropies(PotentialSpec::standard(row.f));
        const std::string n = row.name;
        check_abs(rep.checks, n + " S_x", e.s_x, row.sx, 1e-3);
        check_abs(rep.checks, n + " S_p", e.s_p, row.sp, 1e-3);
        check_abs(rep.checks, n + " sum", e.sum, row.sum, 1e-3);
        check_true(rep.checks, n + " bound", e.sum >= 2.14473 - 1e-6,
                   fmt("sum=%.6f >= %.6f", e.sum, 2.14473 - 1e-6, 0.0));
    }
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CriterionReport criterion4() {
    CriterionReport rep{4, "Gram-Schmidt coefficient blocks", true, {}};
    const auto gz = orthopoly::gram_schmidt_recurrence(orthopoly::WeightSpec::riemann(1.0), 3);
    check_abs(rep.checks, "zeta B1", gz.rec.B[1], 2.19229, 1e-3);
    check_abs(rep.checks, "zeta B2", gz.rec.B[2], 4.09567, 1e-3);
    check_abs(rep.checks, "zeta B3", gz.rec.B[3], 6.07169, 1e-3);
    check_abs(rep.checks, "zeta C2", gz.rec.C[2], 2.10259, 1e-3);
    check_abs(rep.checks, "zeta C3", gz.rec.C[3], 6.14983, 1e-3);
    check_abs(rep.checks, "zeta R1 const", gz.polys[1][0], -2.19229, 1e-3);
    check_abs(rep.checks, "zeta R2 const", gz.polys[2][0], 6.87631, 1e-3);
    check_abs(rep.checks, "zeta R2 lin", gz.polys[2][1], -6.28796, 1e-3);
    check_abs(rep.checks, "zeta R3 const", gz.polys[3][0], -28.2686, 1e-3);
    check_abs(rep.checks, "zeta R3 lin", gz.polys[3][1], 38.905, 1e-3);
    check_abs(rep.checks, "zeta R3 quad", gz.polys[3][2], -12.3597, 1e-3);

    const auto gm =
        orthopoly::gram_schmidt_recurrence(orthopoly::WeightSpec::matrix_integral(), 3);
    check_abs(rep.checks, "matrix B1", gm.rec.B[1], 1.33908, 1e-3);
    check_abs(rep.checks, "matrix B2", gm.rec.B[2], 3.32937, 1e-3);
    check_abs(rep.checks, "matrix B3", gm.rec.B[3], 5.23886, 1e-3);
    check_abs(rep.checks, "matrix C2", gm.rec.C[2], 1.48211, 1e-3);
    check_abs(rep.checks, "matrix C3", gm.rec.C[3], 4.61963, 1e-3);
    check_abs(rep.checks, "matrix R2 const", gm.polys[2][0], 2.97619, 1e-3);
    check_abs(rep.checks, "matrix R2 lin", gm.polys[2][1], -4.66845, 1e-3);
    check_abs(rep.checks, "matrix R3 const", gm.polys[3][0], -9.40578, 1e-3);
    check_abs(rep.checks, "matrix h0", gm.rec.h[0], 0.386294, 1e-3);
    check_abs(rep.checks, "matrix h1", gm.rec.h[1], 0.5725313, 1e-3,
              "printed .52531 contradicts its own C2*h0 = 0.572531");
    check_abs(rep.checks, "matrix h2", gm.rec.h[2], 2.64488, 1e-3);
    check_abs(rep.checks, "matrix h3", gm.rec.h[3], 25.5684, 1e-3);
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CriterionReport criterion5() {
    CriterionReport rep{5, "two-matrix polynomial lists", true, {}};
    const auto gauss =
        orthopoly::two_matrix_biorthogonal(orthopoly::TwoMatrixPrepotential::gaussian, 9);
    const double expect[10][10] = {
        {1}, {0, 1}, {-2, 0, 1}, {0, -6, 0, 1}, {12, 0, -12, 0, 1}, {0, 60, 0, -20, 0, 1},
        {-120, 0, 180, 0, -30, 0, 1}, {0, -840, 0, 420, 0, -42, 0, 1},
        {1680, 0, -3360, 0, 840, 0, -56, 0, 1}, {0, 15120, 0, -10080, 0, 1512, 0, -72, 0, 1}};
    double worst = 0.0;
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(gauss[n][k] - expect[n][k]));
    check_true(rep.checks, "gaussian integer list",
               worst < 1e-8, fmt("max coefficient deviation %.3g (tol 1e-8)", worst, 0, 0));

    const auto xi =
        orthopoly::two_matrix_biorthogonal(orthopoly::TwoMatrixPrepotential::xi_scaled, 9);
    auto rel = [&](std::vector<CheckResult>& out, const char* name, double computed,
                   double printed, const char* note = nullptr) {
        const double d = std::abs(computed - printed) / std::abs(printed);
        std::string detail =
            fmt("computed=%.6g printed=%.6g rel=%.3g", computed, printed, d);
        if (note) detail += std::string(" [") + note + "]";
        out.push_back({name, d < 1e-2, std::move(detail)});
    };
    rel(rep.checks, "xi R4 const", xi[4][0], 10.3688);
    rel(rep.checks, "xi R5 t", xi[5][1], 51.844);
    rel(rep.checks, "xi R6 const", xi[6][0], -69.229);
    rel(rep.checks, "xi R6 t2", xi[6][2], 155.532);
    rel(rep.checks, "xi R7 t", xi[7][1], -484.603);
    rel(rep.checks, "xi R7 t3", xi[7][3], 362.908);
    rel(rep.checks, "xi R8 t2", xi[8][2], -1938.41);
    rel(rep.checks, "xi R8 t4", xi[8][4], 725.815);
    rel(rep.checks, "xi R9 t3", xi[9][3], -5815.24);
    rel(rep.checks, "xi R9 t5", xi[9][5], 1306.47);
    // the two printed values descending from the misprinted eighth series
    // coefficient (3.84 vs the dual-route 6.0544): assert the reconstructed
    // values, report the distance to print
    check_abs(rep.checks, "xi R8 const", xi[8][0], 265.5095, 0.2,
              "printed 280.027 follows the misprinted c8=3.84 (5.2% away)");
    check_abs(rep.checks, "xi R9 t", xi[9][1], 2389.586, 1.5,
              "printed 2520.24 follows the misprinted c8=3.84 (5.2% away)");
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CriterionReport criterion6() {
    CriterionReport rep{6, "prepotential expansions", true, {}};
    PotentialSpec xi1 = PotentialSpec::standard(Family::XiI);
    const auto e1 = analysis::expand_about_minimum(xi1, 8);
    check_abs(rep.checks, "xi1 c0", e1.coeffs[0], 0.112728, 1e-3);
    check_abs(rep.checks, "xi1 c2", e1.coeffs[2], 9.36345, 1e-3);
    check_abs(rep.checks, "xi1 c4", e1.coeffs[4], 5.95896, 1e-3);
    check_abs(rep.checks, "xi1 c6", e1.coeffs[6], -2.1510354815882815, 2e-3,
              "printed -2.09194; series-jet and Chebyshev routes agree on -2.15104");
    check_abs(rep.checks, "xi1 c8", e1.coeffs[8], 6.0543988202659360, 2e-2,
              "printed 3.84; series-jet and Chebyshev routes agree on 6.0544");
    check_abs(rep.checks, "xi1 x_min", e1.x_min, 0.0, 1e-9);

    PotentialSpec xi34 = xi1;
    xi34.A = 0.75;
    const auto e2 = analysis::expand_about_minimum(xi34, 4);
    check_abs(rep.checks, "xi1 A=3/4 quad", e2.coeffs[2], 9.36982, 1e-3);
    check_abs(rep.checks, "xi1 A=3/4 |x_min|", std::abs(e2.x_min), 0.01334675, 1e-5);
    check_true(rep.checks, "xi1 A=3/4 x_min sign", e2.x_min < 0.0,
               fmt("x_min=%.8f (positive tilt shifts the minimum left)", e2.x_min, 0, 0));
    check_abs(rep.checks, "xi1 A=3/4 |cubic|", std::abs(e2.coeffs[3]), 0.318029, 1e-3);

    PotentialSpec rj = PotentialSpec::standard(Family::Ramanujan);
    const auto e3 = analysis::expand_about_minimum(rj, 4);
    check_abs(rep.checks, "ramanujan c0", e3.coeffs[0], 6.32813, 1e-3);
    check_abs(rep.checks, "ramanujan c2", e3.coeffs[2], 3.8946349, 1e-3,
              "printed 0.25*16.7321 = 4.18303; sigma-series and Chebyshev routes agree on 3.89463");
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CriterionReport criterion7() {
    CriterionReport rep{7, "spectra", true, {}};
    PotentialSpec r1{Family::RiemannI, 5.0};
    const auto s1 = spectral::solve_spectrum(r1, {-4.0, 14.0, 4001}, 5, 1e-3);
    const double er1[] = {0.0, 9.54345, 17.2421, 22.4573, 24.7907};
    for (int n = 0; n < 5; ++n)
        check_abs(rep.checks, "riemann1 E" + std::to_string(n), s1.eigenvalues[n], er1[n], 1e-2);

    PotentialSpec rj = PotentialSpec::standard(Family::Ramanujan);
    const auto s2 = spectral::solve_spectrum(rj, {-2.0, 3.0, 4001}, 15, 1e-2);
    const double erj[] = {0.0,    16.8,   35.72,  56.275, 78.21,  101.39, 125.69, 151.04,
                          177.37, 204.624, 232.76, 261.75, 291.55, 322.14, 353.48};
    for (int n = 1; n < 15; ++n) {
        const double d = std::abs(s2.eigenvalues[n] - erj[n]) / erj[n];
        rep.checks.push_back({"ramanujan E" + std::to_string(n), d < 0.01,
                              fmt("computed=%.5g expected=%.5g rel=%.3g", s2.eigenvalues[n],
                                  erj[n], d)});
    }
    check_true(rep.checks, "ramanujan E0", std::abs(s2.eigenvalues[0]) < 1e-4,
               fmt("E0=%.3g", s2.eigenvalues[0], 0, 0));

    const auto q = analysis::quadratic_comparison_spectrum(16.7321, 4);
    check_abs(rep.checks, "quadratic E1", q[1], 16.7321, 1e-4);
    check_abs(rep.checks, "quadratic E3", q[3], 50.1963, 1e-4);
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CriterionReport criterion8() {
    CriterionReport rep{8, "momentum nodes", true, {}};
    const double zeros[] = {14.1347251417, 21.0220396388, 25.0108575801};
    for (auto fam : {analysis::ZeroFamily::xi_based, analysis::ZeroFamily::zeta_based}) {
        const auto zs = analysis::find_momentum_zeros(fam, 0.5, 10.0, 30.0);
        const char* n = (fam == analysis::ZeroFamily::xi_based) ? "xi" : "zeta";
        check_true(rep.checks, std::string(n) + " count", zs.size() == 3,
                   fmt("found %g zeros in (10,30)", double(zs.size()), 0, 0));
        for (std::size_t i = 0; i < zs.size() && i < 3; ++i)
            check_abs(rep.checks, std::string(n) + " zero " + std::to_string(i + 1), zs[i].p,
                      zeros[i], 1e-5);
    }
    const auto morse = analysis::find_momentum_zeros(analysis::ZeroFamily::morse, 5.0, 0.5, 60.0);
    check_true(rep.checks, "morse node-free", morse.empty(),
               fmt("%g zeros found on (0,60)", double(morse.size()), 0, 0));
    for (double A : {0.6, 0.9}) {
        const auto scan = analysis::node_scan_off_critical(A, {14.134725, 21.022040, 25.010858});
        check_true(rep.checks, fmt("A=%.1f scan positive", A, 0, 0),
                   scan.min_abs > 0.0 && scan.min_eta > 1e-3,
                   fmt("min|psi~|=%.3g min|eta|=%.3g", scan.min_abs, scan.min_eta, 0.0));
    }
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

CriterionReport criterion9() {
    CriterionReport rep{9, "property suites", true, {}};

    // FT cross-validation at 1e-7 where the transform is above the
    // quadrature floor
    double worst_ft = 0.0;
    for (Family f : {Family::SHO, Family::Morse, Family::RiemannI, Family::RiemannII,
                     Family::XiI, Family::XiII, Family::Ramanujan}) {
        PotentialSpec spec = PotentialSpec::standard(f);
        const double scale0 = std::abs(analysis::momentum_ground_state(spec, 0.0));
        for (double p : {0.4, 1.3, 2.9, 4.4, 6.2}) {
            const auto closed = analysis::momentum_ground_state(spec, p);
            if (std::abs(closed) < 1e-6 * scale0) continue;
            const auto numeric = analysis::fourier_transform_numeric(spec, p);
            worst_ft = std::max(worst_ft, std::abs(numeric - closed) / std::abs(closed));
        }
    }
    check_true(rep.checks, "FT cross-validation", worst_ft < 1e-7,
               fmt("worst relative gap %.3g (tol 1e-7)", worst_ft, 0, 0));

    // Parseval
    double worst_par = 0.0;
    for (Family f : {Family::SHO, Family::Morse, Family::RiemannI, Family::RiemannII,
                     Family::XiI, Family::XiII}) {
        PotentialSpec spec = PotentialSpec::standard(f);
        const double pmax = (f == Family::XiI || f == Family::XiII) ? 60.0 : 45.0;
        const double total = quadrature::gauss_legendre_composite(
            [&](double p) { return std::norm(analysis::momentum_ground_state(spec, p)); }, -pmax,
            pmax, 700);
        worst_par = std::max(worst_par, std::abs(total - 1.0));
    }
    check_true(rep.checks, "Parseval", worst_par < 1e-6,
               fmt("worst |norm-1| = %.3g (tol 1e-6)", worst_par, 0, 0));

    // shape invariance A-independence
    double worst_si = 0.0;
    for (double x : {-0.8, 0.0, 1.1, 2.5}) {
        const double base = potentials::shape_invariance_residual(0.5, x);
        for (double A : {1.0, 2.0, 5.0})
            worst_si = std::max(worst_si,
                                std::abs(potentials::shape_invariance_residual(A, x) - base));
    }
    check_true(rep.checks, "shape invariance A-independence", worst_si < 1e-12,
               fmt("worst spread %.3g (tol 1e-12)", worst_si, 0, 0));

    // ladder annihilation
    spectral::Grid g{-4.0, 18.0, 22001};
    PotentialSpec morse{Family::Morse, 5.0};
    const auto psi = spectral::sample_ground_state(morse, g);
    const double ann = spectral::apply_annihilation(morse, psi).norm() / psi.norm();
    check_true(rep.checks, "ladder annihilation", ann < 1e-5,
               fmt("|a psi0|/|psi0| = %.3g (tol 1e-5)", ann, 0, 0));

    // jacobi char poly + interlacing to degree 8
    const auto gs = orthopoly::gram_schmidt_recurrence(orthopoly::WeightSpec::riemann(1.0), 8);
    double worst_cp = 0.0;
    bool interlace = true;
    for (int m = 2; m <= 8; ++m) {
        worst_cp = std::max(worst_cp, orthopoly::char_poly_check(gs.rec, gs.polys, m));
        const auto lo = orthopoly::jacobi_eigenvalues(orthopoly::jacobi_matrix(gs.rec, m - 1));
        const auto hi = orthopoly::jacobi_eigenvalues(orthopoly::jacobi_matrix(gs.rec, m));
        for (int i = 0; i + 1 < m; ++i)
            interlace = interlace && hi[i] < lo[i] && lo[i] < hi[i + 1];
    }
    check_true(rep.checks, "jacobi char-poly", worst_cp < 1e-3,
               fmt("worst |det - R_m| = %.3g", worst_cp, 0, 0));
    check_true(rep.checks, "root interlacing", interlace, "degrees 2..8");

    // theta and discriminant identities
    double worst_theta = 0.0;
    for (double q : {std::exp(-4.0 * kPi), std::exp(-kPi), std::exp(-kPi / 4.0)}) {
        specfun::Nome nome(q);
        worst_theta = std::max(
            worst_theta, std::abs(specfun::theta1_prime_zero(nome) -
                                  specfun::jacobi_theta(2, nome) * specfun::jacobi_theta(3, nome) *
                                      specfun::jacobi_theta(4, nome)));
    }
    check_true(rep.checks, "theta1' identity", worst_theta < 1e-10,
               fmt("worst deviation %.3g", worst_theta, 0, 0));
    double worst_delta = 0.0;
    for (double y : {0.5, 1.0, 2.0, 3.0}) {
        const double a = specfun::modular_discriminant(y);
        const double b = specfun::modular_discriminant_theta_route(y);
        worst_delta = std::max(worst_delta, std::abs(a - b) / a);
    }
    check_true(rep.checks, "discriminant two routes", worst_delta < 1e-10,
               fmt("worst relative %.3g", worst_delta, 0, 0));

    // Penner product vs Barnes closed form
    double worst_pen = 0.0;
    for (int n = 1; n <= 6; ++n)
        for (int a = 1; a <= 6; ++a) {
            const double gamma = -2.0 / a;
            const double zp = orthopoly::partition_penner_product(n, 2, gamma);
            const double zb = orthopoly::partition_penner_barnes(n, 2, gamma);
            worst_pen = std::max(worst_pen, std::abs(zp - zb) / zb);
        }
    check_true(rep.checks, "penner product vs G", worst_pen < 1e-10,
               fmt("worst relative %.3g", worst_pen, 0, 0));

    // finite-difference momentum equation
    double worst_morse_fd = 0.0;
    for (double p : {0.5, 2.0, 7.0}) {
        const auto r = analysis::finite_difference_residual(analysis::FdFamily::morse, 5.0, p, 0);
        worst_morse_fd = std::max(
            worst_morse_fd, std::abs(r) / std::abs(specfun::gamma_complex({6.0, p})));
    }
    check_true(rep.checks, "fd morse exact", worst_morse_fd < 1e-10,
               fmt("worst relative %.3g", worst_morse_fd, 0, 0));
    double worst_rs = 0.0;
    for (double p : {1.0, 3.0, 8.0}) {
        const auto r = analysis::finite_difference_residual_resummed(0.5, p);
        worst_rs = std::max(worst_rs, std::abs(r) / std::abs(specfun::gamma_complex({1.5, p})));
    }
    check_true(rep.checks, "fd riemann resummed exact", worst_rs < 1e-10,
               fmt("worst relative %.3g", worst_rs, 0, 0));
    // the truncated Euler series is asymptotic: floor at n_terms ~ 2, then
    // divergence; pin the measured behavior
    const double r2 = std::abs(analysis::finite_difference_residual(
        analysis::FdFamily::riemann_I, 0.5, 3.0, 2));
    const double r15 = std::abs(analysis::finite_difference_residual(
        analysis::FdFamily::riemann_I, 0.5, 3.0, 15));
    check_true(rep.checks, "fd riemann truncated floor", std::abs(r2 - 0.0338502) < 1e-5,
               fmt("optimal-truncation residual %.6g (asymptotic series)", r2, 0, 0));
    check_true(rep.checks, "fd riemann truncated growth", r15 > 1000.0 * r2,
               fmt("residual(15)/residual(2) = %.3g (divergent tail)", r15 / r2, 0, 0));

    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

} // namespace

CriterionReport run_criterion(int id) {
    switch (id) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        default: throw std::domain_error("run_criterion: id in 1..9");
    }
}

std::vector<CriterionReport> run_all() {
    std::vector<CriterionReport> out;
    for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id));
    return out;
}

} // namespace zsqm::verify
