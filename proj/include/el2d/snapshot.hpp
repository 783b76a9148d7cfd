#ifndef EL2D_SNAPSHOT_HPP
#define EL2D_SNAPSHOT_HPP

#include <string>

#include "el2d/field.hpp"

namespace el2d {

/// Field snapshot file: text header `EL2D <N> <L> <components> <t>` followed
/// by little-endian 64-bit floats, row-major, component-contiguous.
void write_snapshot(const std::string& path, const Field& f, double t);

struct LoadedSnapshot {
    Field field;
    double t;
};

/// Loads a snapshot onto the given grid; throws BadParams on any mismatch
/// between the header and the grid.
LoadedSnapshot read_snapshot(const std::string& path, const Grid& g);

} // namespace el2d

#endif
