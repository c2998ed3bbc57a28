#ifndef ZSQM_POTENTIALS_HPP
#define ZSQM_POTENTIALS_HPP

#include <string>

// Catalog of prepotential families. Conventions throughout: 2m = 1, hbar = 1,
// so H_- = -d^2/dx^2 + V_-, W = V0', V∓ = W^2 ∓ W', psi0 = e^{-V0}.

namespace zsqm::potentials {

enum class Family { SHO, Morse, RiemannI, RiemannII, XiI, XiII, Ramanujan };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct PotentialSpec {
    Family family = Family::Morse;
    double A = 0.5;          // omega for SHO
    double T = 1.0;          // RiemannI deformation; T=1 is the Riemann potential
    double quad_boost = 0.0; // extra lambda x^2 added to the prepotential

    // Family with its critical/default parameter: omega=2 (SHO), A=1/2
    // (Morse, Riemann, Xi families), A=6 (Ramanujan).
    static PotentialSpec standard(Family f);
};

double prepotential(const PotentialSpec& spec, double x);
double superpotential(const PotentialSpec& spec, double x);
double superpotential_derivative(const PotentialSpec& spec, double x);

struct PartnerPotentials {
    double v_minus;
    double v_plus;
};
PartnerPotentials partner_potentials(const PotentialSpec& spec, double x);

// RiemannI generalized shape invariance: V+(x, A+1) - V-(x, A), which is
// f2(x) = 2 e^{-2x} exp(e^{-x}) / (1 + exp(e^{-x}))^2 independent of A.
double shape_invariance_residual(double A, double x);
double shape_invariance_f2(double x);

struct NormalizationConstant {
    double value; // N0 = int e^{-2 V0} dx
    enum class Method { analytic, quadrature } method;
};
NormalizationConstant normalization_constant(const PotentialSpec& spec);

// e^{-V0(x)}, divided by sqrt(N0) when normalized.
double ground_state_position(const PotentialSpec& spec, double x, bool normalized);

// Deformation endpoints of V0(x,T) = Ax + e^{-x} + T log(1+e^{-e^{-x}/T}):
// absolute gaps against the Morse prepotential at T = 1e-6 and against the
// exact large-T form Ax + e^{-x}/2 + T log 2 at T = 1e6.
struct TDeformationGaps {
    double morse_limit_gap;
    double shifted_morse_gap;
};
TDeformationGaps t_deformation_endpoints(double A, double x);

// Isospectral Morse family: psi0(x,lambda) =
// sqrt(lambda(lambda+1)) sqrt2 e^{-x/2} / (e^{-e^{-x}} + lambda e^{e^{-x}}),
// unit-normalized for every lambda > 0.
double morse_isospectral_ground_state(double lambda, double x);

// RiemannI in radial coordinates (E_n = 0 ground sector):
// oscillator r^2 = 2 e^{-x}, coulomb r_C = 2 e^{-x}.
enum class RadialKind { oscillator, coulomb };
double radial_potential(double A, double r, RadialKind kind);
double radial_ground_state(double A, double r, RadialKind kind);

// Windows: quadrature window has |psi0|^2 < ~1e-18 of peak outside;
// default_grid is the eigensolver default.
struct Window {
    double lo, hi;
};
Window quadrature_window(const PotentialSpec& spec);
Window default_grid_window(Family f);

} // namespace zsqm::potentials

#endif
