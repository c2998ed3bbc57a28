#ifndef ZSQM_SPECTRAL_HPP
#define ZSQM_SPECTRAL_HPP

#include <vector>

#include "zsqm/potentials.hpp"

// Grid Schroedinger spectra of H_- = -d^2/dx^2 + V_-, Morse closed forms,
// WKB/SWKB quantization, and grid-level ladder/factorization checks.

namespace zsqm::spectral {

using potentials::PotentialSpec;

struct Grid {
    double x_min;
    double x_max;
    int n_points;
    double dx() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * dx(); }
};

struct GridFunction {
    Grid grid;
    std::vector<double> values;
    double norm() const; // sqrt(dx * sum v^2)
};

GridFunction sample_ground_state(const PotentialSpec& spec, const Grid& grid);

struct SpectrumResult {
    std::vector<double> eigenvalues; // Richardson-extrapolated, ascending
    Grid grid;
    double richardson_error; // max |E_fine - E_coarse| / 3 over levels
};

// Lowest k eigenvalues by symmetric tridiagonal finite differences
// (3-point Laplacian, Sturm bisection) on grid and its dx/2 refinement.
// Throws if the window fails the psi0 tail criterion or the two
// resolutions disagree by more than 10x the requested tolerance.
SpectrumResult solve_spectrum(const PotentialSpec& spec, const Grid& grid, int k,
                              double tol = 1e-3);

// E_n = A^2 - (A-n)^2 = 2An - n^2 for 0 <= n <= floor(A).
double morse_exact_energy(double A, int n);

// SWKB: n = (1/pi) int sqrt(E - W^2) dy/y between y = A -+ sqrt(E);
// exact inverse of the Morse spectrum. WKB returns the same integral with
// V_- and the shifted turning points; comes out as n + 1/2.
double swkb_quantization(double A, double E);
double wkb_quantization(double A, double E);

// a = d/dx + W and a^dag = -d/dx + W with 4th-order central differencing.
GridFunction apply_annihilation(const PotentialSpec& spec, const GridFunction& psi);
GridFunction apply_creation(const PotentialSpec& spec, const GridFunction& psi);

// max_i |(a^dag a psi)_i - ((-D^2 + V_-) psi)_i| over interior points.
double factorization_residual(const PotentialSpec& spec, const GridFunction& psi);

// psi_n(x) = e^{-x(A-n)} e^{-e^{-x}} L_n^{(2A-2n)}(2 e^{-x}), 0 <= n < A.
double morse_excited_state(int n, double A, double x);
// || H_- psi_n - E_n psi_n || / || psi_n || on the grid interior.
double morse_eigencheck_residual(int n, double A, const Grid& grid);

// sqrt(alpha n! / Gamma(2 sigma + 1)) y^sigma e^{-y/2} L_n^{(2 sigma - 1)}(y).
// The measured dx-norm is Gamma(n + 2 sigma)/Gamma(2 sigma + 1), not 1;
// see the quadrature tests.
double complete_basis_function(int n, double sigma, double alpha, double y);

// max interior deviation of [a(p1), a^dag(p2)] f from (W'_1 + W'_2) f,
// the operator identity for first-order ladders. p1/p2 are the family
// parameters (omega or A).
double ladder_commutator_residual(potentials::Family family, double p1, double p2,
                                  const GridFunction& testfn);

} // namespace zsqm::spectral

#endif
