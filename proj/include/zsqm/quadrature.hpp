#ifndef ZSQM_QUADRATURE_HPP
#define ZSQM_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace zsqm::quadrature {

enum class Scheme { tanh_sinh, gauss_legendre_composite };

struct QuadratureConfig {
    Scheme scheme = Scheme::tanh_sinh;
    double abs_tol = 1e-12;
    int max_levels = 12;
    double x_lo = -1.0;
    double x_hi = 1.0;
};

// Integrate f over [cfg.x_lo, cfg.x_hi]. tanh_sinh doubles the level until
// two successive levels agree to abs_tol; throws std::runtime_error when
// max_levels is exhausted without convergence.
double integrate(const std::function<double(double)>& f, const QuadratureConfig& cfg);

// Convenience tanh-sinh on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

// Composite 16-point Gauss-Legendre with a fixed panel count; the workhorse
// for oscillatory Fourier integrands (panels sized to the oscillation).
double gauss_legendre_composite(const std::function<double(double)>& f, double a, double b,
                                int panels);

std::complex<double> gauss_legendre_composite_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b, int panels);

} // namespace zsqm::quadrature

#endif
