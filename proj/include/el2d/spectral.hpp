#ifndef EL2D_SPECTRAL_HPP
#define EL2D_SPECTRAL_HPP

#include "el2d/field.hpp"

namespace el2d::spectral {

SpectralField analyze(const Field& f);
Field synthesize(const SpectralField& s);

/// d/dx_axis as a Fourier multiplier (axis is 1 or 2); Nyquist derivative
/// convention k_N -> 0.
SpectralField diff(const SpectralField& s, int axis);
SpectralField laplacian(const SpectralField& s);

/// Zeroes every mode with an integer frequency above floor(N/3) on either
/// axis (2/3 rule).
void dealias_inplace(SpectralField& s);

/// Low-pass multiplier phi(|m|/K) with phi = 1 for r <= 1, 0 for r >= 2 and
/// the C^1 smoothstep in between; m is the integer mode vector.
void mollify_inplace(SpectralField& s, int cutoff);

/// Projects a 2-component spectrum onto its divergence-free part:
/// v_hat -> v_hat - k (k . v_hat)/|k|^2 for k != 0.
void leray_inplace(SpectralField& v);

/// L2 norm computed from a spectrum (Parseval partner of l2_norm).
double l2_norm(const SpectralField& s);

// grid-level wrappers
Field diff(const Field& f, int axis);
/// comp(a*c + l) = d_{a+1} f^l for a in {0,1}
Field gradient(const Field& f);
/// d1 f^0 + d2 f^1 of the first two components
Field divergence2(const Field& f);
Field laplacian(const Field& f);
/// 3-d curl with d3 = 0: (d2 f^2, -d1 f^2, d1 f^1 - d2 f^0)
Field curl3(const Field& f);
Field leray_project(const Field& v);
Field mollify(const Field& f, int cutoff);

/// Quadrature of component `comp` over the periodic ball B_R(x0):
/// indicator-on-grid sum times cell area. Requires 0 < R <= L/2.
double ball_integral(const Field& e, int comp, double x0, double y0, double R);

/// Ball sums for every grid center at once (FFT convolution with the ball
/// indicator); entry (i1,i2) is the ball integral centered at that node.
Field ball_integral_all(const Field& e, int comp, double R);

} // namespace el2d::spectral

#endif
