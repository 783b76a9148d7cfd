#ifndef EL2D_COEFFICIENTS_HPP
#define EL2D_COEFFICIENTS_HPP

#include <array>
#include <cstdint>

#include "el2d/errors.hpp"
#include "el2d/tolerances.hpp"

namespace el2d {

/// Dimensionless Leslie viscosities plus the viscosity split and Reynolds
/// number of the momentum balance.
struct LeslieCoefficients {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double alpha4 = 0.0;
    double alpha5 = 0.0;
    double alpha6 = 0.0;
    double gamma = 0.5;    // in (0,1)
    double reynolds = 1.0; // > 0
};

/// Reduced coefficients computed from the alphas:
///   gamma1 = a3 - a2, gamma2 = a6 - a5,
///   mu1 = 1/gamma1,  mu2 = -gamma2/gamma1,
///   beta1 = a1 + gamma2^2/gamma1, beta2 = a4,
///   beta3 = a5 + a6 - gamma2^2/gamma1.
struct DerivedCoefficients {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta3 = 0.0;
};

/// Frank elastic constants; `a` is always min(k1,k2,k3).
struct ElasticConstants {
    ElasticConstants(double k1_, double k2_, double k3_);
    double k1, k2, k3;
    double a;
};

/// Computes the reduced coefficients.
/// Throws ParodiViolation when |a2+a3-(a6-a5)| > tol::parodi and
/// NonpositiveGamma1 when a3 <= a2. A positive gamma1 is required for the
/// relaxation channel (1/gamma1)|n x h|^2 of the energy balance to dissipate;
/// with gamma1 <= 0 the director equation has no well-posed relaxation rate.
DerivedCoefficients derive(const LeslieCoefficients& alphas);

/// Leslie + derived bundle; construction runs derive() and validates
/// gamma in (0,1), reynolds > 0.
struct Coefficients {
    explicit Coefficients(const LeslieCoefficients& a) : alphas(a), derived(derive(a)) {
        if (!(a.gamma > 0.0 && a.gamma < 1.0))
            throw ValidationError("gamma must lie strictly in (0,1)");
        if (!(a.reynolds > 0.0))
            throw ValidationError("reynolds must be positive");
    }
    LeslieCoefficients alphas;
    DerivedCoefficients derived;
};

struct Betas {
    double beta1, beta2, beta3;
};

/// Closed-form dissipation admissibility check.
/// dim = 3: beta2 >= 0, 2*beta2+beta3 >= 0, 1.5*beta2+beta3+beta1 >= 0.
/// dim = 2: (beta2 >= 0, beta1+2*beta2+beta3 >= 0, beta1 < 0) or
///          (beta2 >= 0, 2*beta2+beta3 >= 0, beta1 >= 0).
/// Borderline values (constraint exactly 0) count as admissible.
bool admissible(const Betas& b, int dim);

/// The quadratic dissipation form
///   beta1 (n.D.n)^2 + beta2 (D:D) + beta3 |D.n|^2
/// for a unit 3-vector n and a symmetric trace-free 3x3 matrix D
/// (row-major). Throws NotUnit / NotSymmetricTraceFree.
double dissipation_form(const Betas& b, const std::array<double, 3>& n,
                        const std::array<double, 9>& D);

/// Sampled minimisation of the dissipation form. For dim = 2 the matrices are
/// D = [[x,y,0],[y,-x,0],[0,0,0]] with (x,y) on the unit circle; directors are
/// drawn on the sphere. On top of `samples` random draws a deterministic
/// sweep of extremal configurations is always evaluated, so non-borderline
/// verdicts match the closed form. Returns false iff some sampled form value
/// is below -tol::form.
bool admissible_bruteforce(const Betas& b, std::int64_t samples, int dim,
                           std::uint64_t seed = 12345);

} // namespace el2d

#endif
