#include "zsqm/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "detail/tridiag.hpp"
#include "zsqm/quadrature.hpp"
#include "zsqm/specfun.hpp"

namespace zsqm::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> fd_eigenvalues(const PotentialSpec& spec, const Grid& g, int k) {
    const double dx = g.dx();
    const double inv = 1.0 / (dx * dx);
    std::vector<double> diag(g.n_points), off(g.n_points - 1, -inv);
    for (int i = 0; i < g.n_points; ++i)
        diag[i] = 2.0 * inv + potentials::partner_potentials(spec, g.x(i)).v_minus;
    return detail::lowest_eigenvalues(diag, off, k);
}

// 4th-order first derivative, one-sided decay assumed outside (psi ~ 0).
std::vector<double> dx4(const std::vector<double>& v, double dx) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out(n, 0.0);
    auto at = [&](int i) { return (i < 0 || i >= n) ? 0.0 : v[i]; };
    for (int i = 0; i < n; ++i)
        out[i] = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * dx);
    return out;
}

std::vector<double> dxx4(const std::vector<double>& v, double dx) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out(n, 0.0);
    auto at = [&](int i) { return (i < 0 || i >= n) ? 0.0 : v[i]; };
    for (int i = 0; i < n; ++i)
        out[i] = (-at(i + 2) + 16.0 * at(i + 1) - 30.0 * at(i) + 16.0 * at(i - 1) - at(i - 2)) /
                 (12.0 * dx * dx);
    return out;
}

} // namespace

double GridFunction::norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s * grid.dx());
}

GridFunction sample_ground_state(const PotentialSpec& spec, const Grid& grid) {
    GridFunction f{grid, std::vector<double>(grid.n_points)};
    for (int i = 0; i < grid.n_points; ++i)
        f.values[i] = potentials::ground_state_position(spec, grid.x(i), false);
    double n = f.norm();
    for (double& v : f.values) v /= n;
    return f;
}

SpectrumResult solve_spectrum(const PotentialSpec& spec, const Grid& grid, int k, double tol) {
    if (k < 1) throw std::domain_error("solve_spectrum: k >= 1");
    if (grid.n_points < 3) throw std::domain_error("solve_spectrum: n_points >= 3");

    // window check: psi0 must have decayed at both ends
    const double pl = potentials::ground_state_position(spec, grid.x_min, false);
    const double pr = potentials::ground_state_position(spec, grid.x_max, false);
    double peak = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double x = grid.x_min + (grid.x_max - grid.x_min) * i / 63.0;
        peak = std::max(peak, potentials::ground_state_position(spec, x, false));
    }
    if (pl > 1e-8 * peak || pr > 1e-8 * peak)
        throw std::runtime_error("solve_spectrum: grid too narrow (psi0 tail criterion)");

    const auto coarse = fd_eigenvalues(spec, grid, k);
    Grid fine{grid.x_min, grid.x_max, 2 * grid.n_points - 1};
    const auto refined = fd_eigenvalues(spec, fine, k);

    SpectrumResult out;
    out.grid = grid;
    out.richardson_error = 0.0;
    out.eigenvalues.resize(k);
    for (int i = 0; i < k; ++i) {
        out.eigenvalues[i] = (4.0 * refined[i] - coarse[i]) / 3.0;
        out.richardson_error = std::max(out.richardson_error,
                                        std::abs(refined[i] - coarse[i]) / 3.0);
    }
    if (out.richardson_error > 10.0 * tol)
        throw std::runtime_error("solve_spectrum: resolutions disagree beyond tolerance");
    return out;
}

double morse_exact_energy(double A, int n) {
    if (n < 0 || n > static_cast<int>(std::floor(A)))
        throw std::domain_error("morse_exact_energy: 0 <= n <= floor(A)");
    return 2.0 * A * n - static_cast<double>(n) * n;
}

double swkb_quantization(double A, double E) {
    if (!(E > 0.0 && E < A * A)) throw std::domain_error("swkb: 0 < E < A^2");
    // y = A + sqrt(E) sin(theta) removes the turning-point square roots:
    // n = (1/pi) int E cos^2(theta) / y(theta) dtheta
    const double rad = std::sqrt(E);
    return quadrature::gauss_legendre_composite(
               [&](double th) {
                   const double c = std::cos(th);
                   return E * c * c / (A + rad * std::sin(th));
               },
               -0.5 * kPi, 0.5 * kPi, 16) /
           kPi;
}

double wkb_quantization(double A, double E) {
    if (!(E > 0.0 && E < A * A)) throw std::domain_error("wkb: 0 < E < A^2");
    const double c0 = A + 0.5;
    const double rad = std::sqrt(E + A + 0.25);
    // E - V_- = rad^2 - (y - c0)^2 with V_- = A^2 + y^2 - (2A+1) y
    return quadrature::gauss_legendre_composite(
               [&](double th) {
                   const double c = std::cos(th);
                   return rad * rad * c * c / (c0 + rad * std::sin(th));
               },
               -0.5 * kPi, 0.5 * kPi, 16) /
           kPi;
}

GridFunction apply_annihilation(const PotentialSpec& spec, const GridFunction& psi) {
    GridFunction out{psi.grid, dx4(psi.values, psi.grid.dx())};
    for (int i = 0; i < psi.grid.n_points; ++i)
        out.values[i] += potentials::superpotential(spec, psi.grid.x(i)) * psi.values[i];
    return out;
}

GridFunction apply_creation(const PotentialSpec& spec, const GridFunction& psi) {
    GridFunction out{psi.grid, dx4(psi.values, psi.grid.dx())};
    for (int i = 0; i < psi.grid.n_points; ++i)
        out.values[i] = -out.values[i] +
                        potentials::superpotential(spec, psi.grid.x(i)) * psi.values[i];
    return out;
}

double factorization_residual(const PotentialSpec& spec, const GridFunction& psi) {
    const GridFunction ada = apply_creation(spec, apply_annihilation(spec, psi));
    const auto lap = dxx4(psi.values, psi.grid.dx());
    double worst = 0.0;
    // skip a margin where the one-sided stencils of the two routes differ
    for (int i = 4; i < psi.grid.n_points - 4; ++i) {
        const double h = -lap[i] +
                         potentials::partner_potentials(spec, psi.grid.x(i)).v_minus *
                             psi.values[i];
        worst = std::max(worst, std::abs(ada.values[i] - h));
    }
    return worst;
}

double morse_excited_state(int n, double A, double x) {
    if (n < 0 || n >= A) throw std::domain_error("morse_excited_state: 0 <= n < A");
    const double y = std::exp(-x);
    return std::exp(-x * (A - n)) * std::exp(-y) * specfun::laguerre(n, 2.0 * A - 2.0 * n, 2.0 * y);
}

double morse_eigencheck_residual(int n, double A, const Grid& grid) {
    PotentialSpec spec{potentials::Family::Morse, A};
    GridFunction psi{grid, std::vector<double>(grid.n_points)};
    for (int i = 0; i < grid.n_points; ++i) psi.values[i] = morse_excited_state(n, A, grid.x(i));
    const double en = morse_exact_energy(A, n);
    const auto lap = dxx4(psi.values, grid.dx());
    double num = 0.0, den = 0.0;
    for (int i = 4; i < grid.n_points - 4; ++i) {
        const double h = -lap[i] +
                         potentials::partner_potentials(spec, grid.x(i)).v_minus * psi.values[i];
        num += (h - en * psi.values[i]) * (h - en * psi.values[i]);
        den += psi.values[i] * psi.values[i];
    }
    return std::sqrt(num / den);
}

double complete_basis_function(int n, double sigma, double alpha, double y) {
    if (!(sigma > 0.0)) throw std::domain_error("complete_basis_function: sigma > 0");
    if (!(y > 0.0)) throw std::domain_error("complete_basis_function: y > 0");
    double lfact = 0.0;
    for (int k = 2; k <= n; ++k) lfact += std::log(static_cast<double>(k));
    const double pref = std::sqrt(alpha) * std::exp(0.5 * (lfact - std::lgamma(2.0 * sigma + 1.0)));
    return pref * std::pow(y, sigma) * std::exp(-0.5 * y) *
           specfun::laguerre(n, 2.0 * sigma - 1.0, y);
}

double ladder_commutator_residual(potentials::Family family, double p1, double p2,
                                  const GridFunction& testfn) {
    PotentialSpec s1{family, p1};
    PotentialSpec s2{family, p2};
    // [a(p1), adag(p2)] f computed by operator application
    const GridFunction lhs1 = apply_annihilation(s1, apply_creation(s2, testfn));
    const GridFunction lhs2 = apply_creation(s2, apply_annihilation(s1, testfn));
    double worst = 0.0;
    for (int i = 4; i < testfn.grid.n_points - 4; ++i) {
        const double x = testfn.grid.x(i);
        const double c = potentials::superpotential_derivative(s1, x) +
                         potentials::superpotential_derivative(s2, x);
        worst = std::max(worst,
                         std::abs(lhs1.values[i] - lhs2.values[i] - c * testfn.values[i]));
    }
    return worst;
}

} // namespace zsqm::spectral
