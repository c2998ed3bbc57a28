#ifndef ZSQM_ANALYSIS_HPP
#define ZSQM_ANALYSIS_HPP

#include <complex>
#include <vector>

#include "zsqm/potentials.hpp"
#include "zsqm/quadrature.hpp"

// Momentum-space ground states (closed form and numerically transformed),
// node location on the critical line, the imaginary-shift difference
// equation, moments, Shannon entropies, and prepotential expansions.
//
// Fourier convention: psi~(p) = (1/sqrt(2 pi)) int psi(x) e^{-ipx} dx
// (unitary), so Parseval holds exactly and every family's closed form
// carries the 1/sqrt(2 pi N0) prefactor.

namespace zsqm::analysis {

using Complex = std::complex<double>;
using potentials::Family;
using potentials::PotentialSpec;

// Normalized closed-form momentum ground state.
Complex momentum_ground_state(const PotentialSpec& spec, double p);

// Same quantity by direct quadrature of the position ground state; the
// library's central cross-validation.
Complex fourier_transform_numeric(const PotentialSpec& spec, double p,
                                  const quadrature::QuadratureConfig* cfg = nullptr);

struct ZeroRecord {
    double p;
    double residual; // magnitude of the last Newton/bisection step
    int newton_iterations;
};

enum class ZeroFamily { zeta_based, xi_based, morse };

// Zeros of p -> psi~(p) on [p_lo, p_hi]. zeta_based and morse walk
// winding-number boxes (0.5 in p, +-0.2 around A) in s = A + ip and
// Newton-refine; only roots that fall back on the real-p line (Re s = A)
// are reported. xi_based at A = 1/2 uses sign-change bisection on the
// real-valued xi(1/2 + ip).
std::vector<ZeroRecord> find_momentum_zeros(ZeroFamily family, double A, double p_lo,
                                            double p_hi);

struct NodeScan {
    double min_abs;   // min |psi~| over the scan
    double min_eta;   // same with the Gamma envelope removed: min |eta(A+ip)|
    double p_at_min;
};

// Fine scan of |Gamma eta| around each critical ordinate; strictly positive
// minima away from A = 1/2 (an empirical probe, not a proof).
NodeScan node_scan_off_critical(double A, const std::vector<double>& p_centers);

enum class FdFamily { morse, riemann_I };

// Truncated imaginary-shift difference equation residual:
//   morse:     (A+ip) psi~(p) - psi~(p - i)                     [exactly 0]
//   riemann_I: ... + (1/2) sum_{n=0}^{n_terms} E_n(0) psi~(p - i(n+1))/n!
// The Euler series is asymptotic: terms shrink only until n ~ 2-3, so the
// truncated residual has an optimal-truncation floor; see the resummed form.
Complex finite_difference_residual(FdFamily family, double A, double p, int n_terms);

// RiemannI residual with the Euler series resummed in closed form,
// FT[f1 psi0](p) = Gamma(s+1)(eta(s+1) - eta(s)); identically zero up to
// function accuracy.
Complex finite_difference_residual_resummed(double A, double p);

struct Moments {
    double mean;
    double second;
    double spread;
};
Moments position_moments(const PotentialSpec& spec);
Moments momentum_moments(const PotentialSpec& spec);
// <p^2> through int |psi0'|^2 dx = int W^2 psi0^2 dx; must agree with the
// momentum-density route to 1e-6.
double momentum_second_moment_derivative_route(const PotentialSpec& spec);
double uncertainty_product(const PotentialSpec& spec);

struct Entropies {
    double s_x;
    double s_p;
    double sum;
};
Entropies shannon_entropies(const PotentialSpec& spec);

struct ExpansionResult {
    double x_min;
    std::vector<double> coeffs; // Taylor coefficients about x_min, 0..order
};
// Minimum by bisection + Newton on the analytic superpotential; Taylor
// coefficients by Chebyshev-node interpolation on a shrinking window with
// a half-window consistency (Richardson) validation.
ExpansionResult expand_about_minimum(const PotentialSpec& spec, int order);

// {0, w, 2w, ...}; also runs the grid solver on V_- = w^2 x^2/4 - w/2 and
// throws if the two disagree beyond 1e-4.
std::vector<double> quadratic_comparison_spectrum(double omega, int k);

} // namespace zsqm::analysis

#endif
