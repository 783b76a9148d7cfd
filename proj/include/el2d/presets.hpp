#ifndef EL2D_PRESETS_HPP
#define EL2D_PRESETS_HPP

#include <array>
#include <string>

#include "el2d/dynamics.hpp"

namespace el2d {

enum class VelocityPreset { zero, taylor_green };

struct PresetParams {
    double amplitude = 0.0;                    // director preset amplitude
    std::array<double, 3> b = {1.0, 0.0, 0.0}; // far-field director
    std::array<double, 2> center = {0.0, 0.0}; // bump center (0,0 = domain center)
    double width = 0.0;                        // bump width (0 = L/16)
    VelocityPreset velocity = VelocityPreset::zero;
    double velocity_amplitude = 0.0;
    std::string snapshot_prefix;               // for the snapshot preset
};

/// Initial conditions:
///   uniform      n = b, v = 0
///   taylor-green single-mode solenoidal v, n = b
///   twist        n = (cos th, sin th, 0), th = A sin(2 pi x1 / L)
///   bump         localized director perturbation of b, normalised
///   snapshot     load <prefix>_v.el2 and <prefix>_n.el2
/// Any preset may be combined with the taylor-green velocity through params.
State initial_preset(const std::string& name, const PresetParams& params, const Grid& g);

} // namespace el2d

#endif
