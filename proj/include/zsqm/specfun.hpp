#ifndef ZSQM_SPECFUN_HPP
#define ZSQM_SPECFUN_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

// Special functions needed by the potential catalog: complex Gamma,
// Dirichlet eta / Riemann zeta / Xi, Jacobi theta series at z = 0 with
// q-derivatives, the Phi profiles built from them, the modular
// discriminant, Euler numbers, Barnes G, and the classical orthogonal
// polynomial / Bessel / Airy evaluations used in the asymptotic checks.
//
// All functions are pure; double precision throughout. Units elsewhere in
// the library are fixed to 2m = 1, hbar = 1.

namespace zsqm::specfun {

using Complex = std::complex<double>;

// Gamma(z) by Lanczos approximation, reflection for Re z < 0.5.
// Relative error <~ 1e-13 for Re z in [-10, 50], |Im z| <= 100.
// Throws std::domain_error at non-positive integers.
Complex gamma_complex(Complex z);

// Dirichlet eta (alternating zeta), entire. Borwein-accelerated alternating
// series; term count grows with |Im s| to hold ~1e-13 absolute for |Im s| <= 60.
Complex dirichlet_eta(Complex s);

// zeta(s) = eta(s) / (1 - 2^{1-s}).  Throws std::domain_error at s = 1;
// near the removable points s = 1 + 2 pi i k / log 2 switches to the
// derivative quotient.
Complex riemann_zeta(Complex s);

// Completed zeta: xi(s) = (s-1) pi^{-s/2} Gamma(s/2 + 1) zeta(s).
// Entire, xi(s) = xi(1-s), real on the critical line.
Complex riemann_xi(Complex s);

// Nome of the theta series, q in [0, 1).
class Nome {
  public:
    explicit Nome(double q);
    double value() const { return q_; }

  private:
    double q_;
};

// theta_k(0|q) for kind = 2, 3, 4. Series truncated at term < 1e-30.
double jacobi_theta(int kind, Nome q);

// theta_1'(0, q) = 2 sum (-1)^n (2n+1) q^{(n+1/2)^2}.
double theta1_prime_zero(Nome q);

// f(q) = q d_q theta3(0|q),  g(q) = q^2 d_q^2 theta3 + q d_q theta3,
// computed term-by-term from the series.
struct ThetaQDerivatives {
    double f;
    double g;
};
ThetaQDerivatives theta3_q_derivatives(Nome q);

// Phi(x): Fourier transform profile of xi(1/2 + ip), assembled from f and g
// with nome q = e^{-pi e^{-2x}}:
//   Phi = 2 pi^2 g(q) (-log q / pi)^{9/4} - 3 pi f(q) (-log q / pi)^{5/4}.
// Even in x; evaluated on the convergent side x <= 0 (the series at x > 0
// cancels below double precision).
double phi_function(double x);
double phi_function_dx(double x);
double phi_function_dxx(double x);

// Phi_II(x) = e^{-x/2} (theta4 + theta2 - theta3)(0 | e^{-pi e^{-2x}}), even.
double phi2_function(double x);
double phi2_function_dx(double x);
double phi2_function_dxx(double x);

// Direct series evaluation without the even reflection; usable for x <~ 1
// where cancellation is still mild. Exposed for the evenness checks.
double phi_series_raw(double x);
double phi2_series_raw(double x);

// Maclaurin coefficients (0..ORDER-1, odd ones vanish) of -log Phi(x).
std::array<double, 10> xi1_prepotential_taylor();

// Modular discriminant Delta(iy), y > 0: Dedekind-eta-product^24 with the
// weight-12 flip Delta(iy) = y^{-12} Delta(i/y) for small y, and the
// independent (theta1'(0, e^{-pi y})/2)^8 route.
double modular_discriminant(double y);
double modular_discriminant_theta_route(double y);
// log Delta(iy); stays finite where Delta itself underflows.
double log_modular_discriminant(double y);

// d/dy log Delta(iy) and d^2/dy^2 log Delta(iy), term-wise from the product
// representation (never numeric differencing).
double delta_log_derivative(double y);
double delta_log_derivative2(double y);

// Ramanujan tau(n) for n = 1..nmax from the q-expansion of the
// discriminant product, exact 64-bit integers (safe well past n = 300).
std::vector<std::int64_t> ramanujan_tau(int nmax);

// Euler polynomial values E_n(0) as exact rationals from the generating
// function 2/(e^t + 1) = sum E_n(0) t^n / n!.
struct Rational {
    std::int64_t num;
    std::int64_t den;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Rational euler_number_at_zero(int n);

// Barnes G at positive integers: G(1) = G(2) = 1, G(n) = prod_{k=1}^{n-2} k!.
double barnes_g(int n);

// Monic (probabilists') Hermite: He_{n+1} = x He_n - n He_{n-1}.
double hermite_he(int n, double x);
// Physicists' Hermite: H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_h(int n, double x);
// Associated Laguerre by the three-term recurrence.
double laguerre(int n, double alpha, double y);

// J_alpha(x) for alpha > -1, 0 <= x <= 50: ascending series, Hankel
// asymptotics for large x. Absolute error <= 1e-9 on the domain.
double bessel_j(double alpha, double x);

// Ai(u) for |u| <= 10: Maclaurin series, asymptotic branch for u > 7.
double airy_ai(double u);

} // namespace zsqm::specfun

#endif
