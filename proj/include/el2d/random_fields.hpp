#ifndef EL2D_RANDOM_FIELDS_HPP
#define EL2D_RANDOM_FIELDS_HPP

#include <array>
#include <cstdint>

#include "el2d/field.hpp"

namespace el2d {

/// Band-limited random scalar with Gaussian-decaying spectrum: modes with
/// integer frequency |m| <= max_mode, amplitudes ~ amplitude *
/// exp(-|m|^2/decay^2). Deterministic for a given seed.
Field random_scalar(const Grid& g, std::uint64_t seed, int max_mode, double amplitude,
                    double decay);

/// Unit director b + band-limited perturbation, normalised pointwise. The
/// perturbation is rescaled if it ever drives |b + delta| below 0.25.
Field random_director(const Grid& g, std::uint64_t seed, int max_mode, double amplitude,
                      const std::array<double, 3>& b = {1.0, 0.0, 0.0});

/// Divergence-free band-limited velocity from a random streamfunction:
/// v = (-d2 psi, d1 psi).
Field random_velocity(const Grid& g, std::uint64_t seed, int max_mode, double amplitude);

} // namespace el2d

#endif
