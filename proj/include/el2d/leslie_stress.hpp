#ifndef EL2D_LESLIE_STRESS_HPP
#define EL2D_LESLIE_STRESS_HPP

#include "el2d/coefficients.hpp"
#include "el2d/field.hpp"
#include "el2d/oseen_frank.hpp"

namespace el2d {

/// Velocity-gradient tensors and the co-rotational director rate.
/// Conventions: (grad v)_{ij} = d_i v^j, kappa = (grad v)^T, so
/// kappa_{ij} = d_j v^i, D = (kappa^T + kappa)/2, Omega = (kappa^T - kappa)/2,
/// N = n_t + v.grad n + Omega.n. Tensors are 3x3 row-major (comp = i*3+j)
/// with the third row/column zero.
struct Kinematics {
    Field kappa;
    Field D;
    Field Omega;
    Field N;
};

Kinematics kinematics(const Field& v, const Field& n, const Field& n_t);

/// Viscous stress
///   sigma^L = a1 (nn:D) nn + a2 nN + a3 Nn + a4 D + a5 nn.D + a6 D.nn
/// with (nN)_{ij} = n^i N^j. Power pairs as sigma_{ij} d_i v^j and the force
/// is (div sigma)_j = d_i sigma_{ij}.
Field leslie_stress(const LeslieCoefficients& alphas, const Kinematics& kin, const Field& n);

/// Elastic stress sigma^E_{ij} = -W_{p_i^l} grad_j n^l (the orientation whose
/// power against grad v cancels the transport term of the elastic energy).
Field ericksen_stress(const ElasticState& st, const ElasticConstants& k);

/// Regularised viscous stress sigma_1 + sigma_2 of the unit-length-free
/// system: sigma_1 = b1 (nn:D) nn + b2 |n|^4 D + (b3/2)|n|^2 (n(Dn) + (Dn)n),
/// sigma_2 = ((-1-mu2)/2) n q + ((1-mu2)/2) q n with q = n x (h x n).
Field regularized_stress(const DerivedCoefficients& d, const Field& n, const Field& D,
                         const Field& h);

/// |LHS - RHS| of the stress-power identity: LHS = -int sigma^L : grad v,
/// RHS = -int [ b1 (nn:D)^2 + b3 |D.n|^2 + b2 D:D ]
///       - int h . Omega . n - (gamma2/gamma1) int (n x (h x n)) . (D.n).
/// n_t must come from the director equation for the identity to close.
double stress_power_residual(const LeslieCoefficients& alphas, const DerivedCoefficients& d,
                             const Field& v, const Field& n, const Field& n_t,
                             const ElasticConstants& k);

} // namespace el2d

#endif
