#include "zsqm/potentials.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zsqm/quadrature.hpp"
#include "zsqm/specfun.hpp"

namespace zsqm::potentials {

namespace {

constexpr double kPi = std::numbers::pi;

void check_window(Family f, double x) {
    switch (f) {
        case Family::XiI:
        case Family::XiII:
            // the leading theta term e^{-pi e^{-2x}} underflows past |x| = 2.71
            if (std::abs(x) > 2.65)
                throw std::domain_error("potential: |x| <= 2.65 for the Xi families");
            break;
        case Family::RiemannI:
        case Family::RiemannII:
        case Family::Ramanujan:
            if (std::exp(-x) > 700.0)
                throw std::domain_error("potential: e^{-x} > 700 (overflow guard)");
            break;
        case Family::Morse:
            if (-x > 690.0) throw std::domain_error("potential: e^{-x} overflows");
            break;
        case Family::SHO:
            break;
    }
}

// V0(x,T) = A x + y + T log(1 + e^{-y/T}), y = e^{-x}; log1p keeps both
// T-limits finite (T->0 recovers Morse, T->inf the shifted Morse).
double riemann1_v0(double A, double T, double x) {
    const double y = std::exp(-x);
    if (T <= 0.0) return A * x + y;
    return A * x + y + T * std::log1p(std::exp(-y / T));
}

double riemann1_w(double A, double T, double x) {
    const double y = std::exp(-x);
    if (T <= 0.0 || y / T > 500.0) return A - y;
    return A - y + y / (1.0 + std::exp(y / T));
}

double riemann1_wprime(double A, double T, double x) {
    (void)A;
    const double y = std::exp(-x);
    if (T <= 0.0 || y / T > 500.0) return y;
    const double E = std::exp(y / T);
    const double g = 1.0 / (1.0 + E) - y * E / (T * (1.0 + E) * (1.0 + E));
    return y - y * g;
}

double sech2(double y) {
    const double e = std::exp(-2.0 * y);
    const double d = 1.0 + e;
    return 4.0 * e / (d * d);
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::SHO: return "sho";
        case Family::Morse: return "morse";
        case Family::RiemannI: return "riemann1";
        case Family::RiemannII: return "riemann2";
        case Family::XiI: return "xi1";
        case Family::XiII: return "xi2";
        case Family::Ramanujan: return "ramanujan";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "sho") return Family::SHO;
    if (name == "morse") return Family::Morse;
    if (name == "riemann1") return Family::RiemannI;
    if (name == "riemann2") return Family::RiemannII;
    if (name == "xi1") return Family::XiI;
    if (name == "xi2") return Family::XiII;
    if (name == "ramanujan") return Family::Ramanujan;
    throw std::domain_error("unknown family: " + name);
}

PotentialSpec PotentialSpec::standard(Family f) {
    PotentialSpec s;
    s.family = f;
    switch (f) {
        case Family::SHO: s.A = 2.0; break;
        case Family::Ramanujan: s.A = 6.0; break;
        default: s.A = 0.5; break;
    }
    return s;
}

double prepotential(const PotentialSpec& spec, double x) {
    check_window(spec.family, x);
    const double boost = spec.quad_boost * x * x;
    switch (spec.family) {
        case Family::SHO:
            return 0.25 * spec.A * x * x + boost;
        case Family::Morse:
            return spec.A * x + std::exp(-x) + boost;
        case Family::RiemannI:
            return riemann1_v0(spec.A, spec.T, x) + boost;
        case Family::RiemannII: {
            // (A+1)x + 2 log cosh(e^{-x}), cosh written overflow-free
            const double y = std::exp(-x);
            return (spec.A + 1.0) * x + 2.0 * (y - std::log(2.0) + std::log1p(std::exp(-2.0 * y))) +
                   boost;
        }
        case Family::XiI:
            return (spec.A - 0.5) * x - std::log(specfun::phi_function(x)) + boost;
        case Family::XiII:
            return (spec.A - 0.5) * x - std::log(specfun::phi2_function(x)) + boost;
        case Family::Ramanujan: {
            const double y = std::exp(-x);
            return spec.A * x - specfun::log_modular_discriminant(y) + boost;
        }
    }
    throw std::logic_error("unreachable");
}

double superpotential(const PotentialSpec& spec, double x) {
    check_window(spec.family, x);
    const double boost = 2.0 * spec.quad_boost * x;
    switch (spec.family) {
        case Family::SHO:
            return 0.5 * spec.A * x + boost;
        case Family::Morse:
            return spec.A - std::exp(-x) + boost;
        case Family::RiemannI:
            return riemann1_w(spec.A, spec.T, x) + boost;
        case Family::RiemannII: {
            const double y = std::exp(-x);
            return (spec.A + 1.0) - 2.0 * y * std::tanh(y) + boost;
        }
        case Family::XiI:
            return (spec.A - 0.5) - specfun::phi_function_dx(x) / specfun::phi_function(x) + boost;
        case Family::XiII:
            return (spec.A - 0.5) - specfun::phi2_function_dx(x) / specfun::phi2_function(x) +
                   boost;
        case Family::Ramanujan: {
            const double y = std::exp(-x);
            return spec.A + y * specfun::delta_log_derivative(y) + boost;
        }
    }
    throw std::logic_error("unreachable");
}

double superpotential_derivative(const PotentialSpec& spec, double x) {
    check_window(spec.family, x);
    const double boost = 2.0 * spec.quad_boost;
    switch (spec.family) {
        case Family::SHO:
            return 0.5 * spec.A + boost;
        case Family::Morse:
            return std::exp(-x) + boost;
        case Family::RiemannI:
            return riemann1_wprime(spec.A, spec.T, x) + boost;
        case Family::RiemannII: {
            const double y = std::exp(-x);
            return 2.0 * y * std::tanh(y) + 2.0 * y * y * sech2(y) + boost;
        }
        case Family::XiI: {
            // ratios first: p^2 underflows near the window edge
            const double p = specfun::phi_function(x);
            const double r1 = specfun::phi_function_dx(x) / p;
            const double r2 = specfun::phi_function_dxx(x) / p;
            return -(r2 - r1 * r1) + boost;
        }
        case Family::XiII: {
            const double p = specfun::phi2_function(x);
            const double r1 = specfun::phi2_function_dx(x) / p;
            const double r2 = specfun::phi2_function_dxx(x) / p;
            return -(r2 - r1 * r1) + boost;
        }
        case Family::Ramanujan: {
            const double y = std::exp(-x);
            const double l1 = specfun::delta_log_derivative(y);
            const double l2 = specfun::delta_log_derivative2(y);
            return -y * (l1 + y * l2) + boost;
        }
    }
    throw std::logic_error("unreachable");
}

PartnerPotentials partner_potentials(const PotentialSpec& spec, double x) {
    const double w = superpotential(spec, x);
    const double wp = superpotential_derivative(spec, x);
    return {w * w - wp, w * w + wp};
}

double shape_invariance_f2(double x) {
    const double y = std::exp(-x);
    if (y > 500.0) return 0.0;
    const double E = std::exp(y);
    return 2.0 * y * y * E / ((1.0 + E) * (1.0 + E));
}

// V+(x, A+1) = V-(x, A) + (2A+1) + f2(x); the (2A+1) is the usual
// shape-invariance level shift (A+1)^2 - A^2, subtracted here so the
// returned residual is the A-independent f2.
double shape_invariance_residual(double A, double x) {
    PotentialSpec up{Family::RiemannI, A + 1.0, 1.0, 0.0};
    PotentialSpec dn{Family::RiemannI, A, 1.0, 0.0};
    return partner_potentials(up, x).v_plus - partner_potentials(dn, x).v_minus - (2.0 * A + 1.0);
}

NormalizationConstant normalization_constant(const PotentialSpec& spec) {
    using Method = NormalizationConstant::Method;
    if (spec.quad_boost == 0.0) {
        switch (spec.family) {
            case Family::SHO:
                return {std::sqrt(2.0 * kPi / spec.A), Method::analytic};
            case Family::Morse:
                return {std::tgamma(2.0 * spec.A) / std::pow(2.0, 2.0 * spec.A), Method::analytic};
            case Family::RiemannI: {
                if (spec.T != 1.0) break;
                // int y^{2A-1}/(1+e^y)^2 dy = Gamma(2A) (eta(2A) - eta(2A-1))
                const double a2 = 2.0 * spec.A;
                const double e1 = specfun::dirichlet_eta({a2, 0.0}).real();
                const double e0 = specfun::dirichlet_eta({a2 - 1.0, 0.0}).real();
                return {std::tgamma(a2) * (e1 - e0), Method::analytic};
            }
            case Family::RiemannII:
                if (spec.A == 0.5)
                    return {(kPi * kPi - 6.0) / 18.0, Method::analytic};
                break;
            default:
                break;
        }
    }
    const Window w = quadrature_window(spec);
    const double n0 = quadrature::integrate(
        [&](double x) {
            const double p = ground_state_position(spec, x, false);
            return p * p;
        },
        w.lo, w.hi, 1e-13);
    return {n0, Method::quadrature};
}

double ground_state_position(const PotentialSpec& spec, double x, bool normalized) {
    double v = std::exp(-prepotential(spec, x));
    if (normalized) v /= std::sqrt(normalization_constant(spec).value);
    return v;
}

TDeformationGaps t_deformation_endpoints(double A, double x) {
    const double y = std::exp(-x);
    PotentialSpec small{Family::RiemannI, A, 1e-6, 0.0};
    PotentialSpec large{Family::RiemannI, A, 1e6, 0.0};
    const double morse = A * x + y;
    // T->inf: T log(1+e^{-y/T}) -> T log 2 - y/2 + y^2/(8T)
    const double shifted = A * x + 0.5 * y + 1e6 * std::log(2.0);
    return {std::abs(prepotential(small, x) - morse), std::abs(prepotential(large, x) - shifted)};
}

double morse_isospectral_ground_state(double lambda, double x) {
    if (!(lambda > 0.0)) throw std::domain_error("morse_isospectral: lambda > 0");
    const double y = std::exp(-x);
    if (y > 350.0) return 0.0;
    const double den = std::exp(-y) + lambda * std::exp(y);
    return std::sqrt(lambda * (lambda + 1.0)) * std::sqrt(2.0) * std::exp(-0.5 * x) / den;
}

double radial_potential(double A, double r, RadialKind kind) {
    if (!(r > 0.0)) throw std::domain_error("radial_potential: r > 0");
    if (kind == RadialKind::oscillator) {
        const double E = std::exp(0.5 * r * r);
        return 4.0 * A * A / (r * r) + r * r - 2.0 * (2.0 * A + 1.0) +
               2.0 * (2.0 * A + 1.0) / (E + 1.0) + r * r * (-1.0 - 3.0 * E) / ((E + 1.0) * (E + 1.0));
    }
    const double E = std::exp(0.5 * r);
    return 0.25 - (2.0 * A + 1.0) / (2.0 * r) + A * A / (r * r) +
           (2.0 * A + 1.0) / (2.0 * r * (E + 1.0)) + 0.25 * (-1.0 - 3.0 * E) / ((E + 1.0) * (E + 1.0));
}

double radial_ground_state(double A, double r, RadialKind kind) {
    if (!(r > 0.0)) throw std::domain_error("radial_ground_state: r > 0");
    if (kind == RadialKind::oscillator) return std::pow(r, 2.0 * A) / (1.0 + std::exp(0.5 * r * r));
    return std::pow(r, A) / (std::exp(0.5 * r) + 1.0);
}

Window quadrature_window(const PotentialSpec& spec) {
    switch (spec.family) {
        case Family::SHO:
            return {-std::sqrt(168.0 / spec.A), std::sqrt(168.0 / spec.A)};
        case Family::Morse:
            return {-4.5, 6.0 + 42.0 / spec.A};
        case Family::RiemannI:
            return {-4.5, 6.0 + 42.0 / spec.A};
        case Family::RiemannII:
            return {-4.5, 6.0 + 42.0 / (spec.A + 1.0)};
        case Family::XiI:
        case Family::XiII:
            return {-2.55, 2.55};
        case Family::Ramanujan:
            return {-2.9, 2.0 + 42.0 / spec.A};
    }
    throw std::logic_error("unreachable");
}

Window default_grid_window(Family f) {
    switch (f) {
        case Family::SHO: return {-12.0, 12.0};
        case Family::Morse:
        case Family::RiemannI: return {-4.0, 14.0};
        case Family::RiemannII: return {-4.0, 14.0};
        case Family::XiI:
        case Family::XiII: return {-2.0, 2.0};
        case Family::Ramanujan: return {-2.0, 3.0};
    }
    throw std::logic_error("unreachable");
}

} // namespace zsqm::potentials
