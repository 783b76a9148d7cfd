#ifndef EL2D_CONFIG_HPP
#define EL2D_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "el2d/coefficients.hpp"
#include "el2d/dynamics.hpp"
#include "el2d/presets.hpp"

namespace el2d {

struct MonitorConfig {
    double radius = 0.0;  // 0 = L/8
    int stride = 0;       // 0 = N/8
    std::vector<std::array<double, 2>> points;
};

struct OutputConfig {
    std::string directory = "out";
    int snapshot_stride = 0;  // 0 = initial/final only
    int ledger_stride = 1;
};

struct RunConfig {
    int grid_n = 0;
    double grid_length = 0.0;
    LeslieCoefficients coeffs;
    double k1 = 1.0, k2 = 1.0, k3 = 1.0;
    SolverConfig solver;
    double t_end = 0.0;
    std::string preset;
    PresetParams preset_params;
    OutputConfig output;
    MonitorConfig monitors;
};

/// Flat key-value config text: one `section.key = value` per line, `#`
/// comments. Unknown keys are rejected (ParseError with the line number);
/// invariant violations raise ValidationError. Defaults: scheme=rk4,
/// dealias=on, renormalize=on.
RunConfig load_config(const std::string& path);

/// Parse from an already-loaded string (used by load_config and tests).
RunConfig parse_config(const std::string& text);

/// Normalised `key = value` echo of a parsed config, sorted by key.
std::string config_echo(const RunConfig& cfg);

} // namespace el2d

#endif
