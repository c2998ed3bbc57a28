#ifndef ZSQM_ORTHOPOLY_HPP
#define ZSQM_ORTHOPOLY_HPP

#include <functional>
#include <vector>

// Moments, Gram-Schmidt three-term recurrences, Jacobi matrices, matrix-model
// partition functions, the two-matrix polynomial families, and the large-N
// asymptotic checks. All polynomials are monic, coefficients ascending.

namespace zsqm::orthopoly {

using PolynomialCoeffs = std::vector<double>;

double eval_poly(const PolynomialCoeffs& p, double x);

struct RecurrenceCoefficients {
    std::vector<double> B; // B[k] for k = 1..k_max (B[0] unused)
    std::vector<double> C; // C[k] for k = 2..k_max (C[0], C[1] unused)
    std::vector<double> h; // norms h[0..k_max], all > 0
};

// Closed-form moment of the zeta weight y^alpha e^{-y}/(1+e^{-y}):
//   int_0^inf w(y) y^{m+n} dy = Gamma(1+m+n+alpha) eta(1+m+n+alpha)
//                             = (1 - 2^{-m-n-alpha}) Gamma(1+m+n+alpha) zeta(1+m+n+alpha).
// This is the reading that reproduces B1 = 2.19229.
double moment_riemann_weight(int m, int n, double alpha);

// Moments of the matrix-integral weight e^{-y}/(1+e^{-y/2})^2:
//   mu_k = 2^{k+1} k! (eta(k+1) - eta(k)),  eta(0) = 1/2, eta(1) = log 2.
double moment_matrix_weight(int k);

struct MomentTable {
    std::vector<double> mu; // mu[j] = int w y^j
    // Cholesky positive-definiteness check of the Hankel matrix; throws
    // std::runtime_error when a pivot falls below 1e-10 of the leading one.
    void require_hankel_positive(int size) const;
};

struct WeightSpec {
    enum class Kind { riemann_alpha, matrix_integral, generic } kind;
    double alpha = 1.0;                     // riemann_alpha
    std::function<double(double)> w;        // generic
    double y_lo = 0.0, y_hi = 60.0;         // generic integration window

    static WeightSpec riemann(double alpha);
    static WeightSpec matrix_integral();
    static WeightSpec generic(std::function<double(double)> w, double y_lo, double y_hi);
};

MomentTable build_moments(const WeightSpec& weight, int max_degree);

struct GramSchmidtResult {
    RecurrenceCoefficients rec;
    std::vector<PolynomialCoeffs> polys; // degrees 0..k_max
};

// Monic orthogonal polynomials by the three-term ratio formulas
// B_k = <y R_{k-1}^2>/<R_{k-1}^2>, C_k = h_{k-1}/h_{k-2}, with all bilinear
// moment accumulations in compensated double-double.
GramSchmidtResult gram_schmidt_recurrence(const WeightSpec& weight, int k_max);

struct JacobiMatrix {
    std::vector<double> diag;    // B_1..B_m
    std::vector<double> offdiag; // sqrt(C_2)..sqrt(C_m)
};
JacobiMatrix jacobi_matrix(const RecurrenceCoefficients& rec, int m);

// All m eigenvalues (= roots of R_m), ascending.
std::vector<double> jacobi_eigenvalues(const JacobiMatrix& jm);

// max over sample x of |det(xI - J_m) - R_m(x)|, determinant by the
// three-term expansion.
double char_poly_check(const RecurrenceCoefficients& rec,
                       const std::vector<PolynomialCoeffs>& polys, int m);

// Gaussian one-matrix partition function (2 pi)^{n/2} N^{-n^2/2} G(n+1).
double partition_gaussian(int n, int N);

// Penner model, alpha = -N/gamma > 0: the h_n product N! prod_{k<N... } and
// its Barnes-G closed form (integer alpha for the G route).
double partition_penner_product(int n, int N, double gamma);
double partition_penner_barnes(int n, int N, double gamma);

// Two-matrix polynomials R_n(t) paired against Q_m(a) = a^m through
// e^{-V0(a) - ab}: generating function sum R_n t^n/n! = e^{ut - V0(u) + V0(0)};
// the real-line b-integral is divergent and is regularized by the Fourier
// rotation, which lands exactly on this series (the Gaussian case reproduces
// the integer list).
enum class TwoMatrixPrepotential { gaussian, xi_scaled };
std::vector<PolynomialCoeffs> two_matrix_biorthogonal(TwoMatrixPrepotential kind, int n_max);

// Regularized pairing <a^m, R_n> (up to the overall 2 pi i). For the
// Gaussian prepotential P(u) + P(iu) = 0 and the pairing annihilates all
// m < n exactly; for general prepotentials the family is instead
// characterized by the dual-weight moment identity
// R_n(t) = int w^(s) (t + is)^n ds / int w^ ds with w^ = FT[e^{-V0}].
double two_matrix_pairing(TwoMatrixPrepotential kind, int m, const PolynomialCoeffs& rn);

// Relative gap between the exact recurrence value and the soft-edge /
// Bessel asymptotic forms; decays with n.
double hermite_airy_check(int n, double u);
double laguerre_bessel_check(int n, double alpha, double y);

// a_n = int Phi(x) psi_n^{SHO}(x) dx with oscillator scale m*omega.
std::vector<double> sho_basis_coefficients(int n_max, double m_omega);

} // namespace zsqm::orthopoly

#endif
