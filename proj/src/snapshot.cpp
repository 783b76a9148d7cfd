#include "el2d/snapshot.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace el2d {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

void write_snapshot(const std::string& path, const Field& f, double t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open snapshot file for writing: " + path);
    char header[128];
    std::snprintf(header, sizeof(header), "EL2D %d %.17g %d %.17g\n", f.grid().n(),
                  f.grid().length(), f.comps(), t);
    out << header;
    out.write(reinterpret_cast<const char*>(f.data().data()),
              std::streamsize(f.data().size() * sizeof(double)));
    if (!out) throw Error("snapshot write failed: " + path);
}

LoadedSnapshot read_snapshot(const std::string& path, const Grid& g) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadParams("cannot open snapshot file: " + path);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string magic;
    int n = 0, comps = 0;
    double length = 0.0, t = 0.0;
    hs >> magic >> n >> length >> comps >> t;
    if (!hs || magic != "EL2D") throw BadParams("bad snapshot header in " + path);
    if (n != g.n() || std::abs(length - g.length()) > 1e-12 * g.length())
        throw BadParams("snapshot grid mismatch in " + path);
    if (comps < 1 || comps > 8) throw BadParams("snapshot component count out of range");
    Field f(g, comps);
    in.read(reinterpret_cast<char*>(f.data().data()),
            std::streamsize(f.data().size() * sizeof(double)));
    if (in.gcount() != std::streamsize(f.data().size() * sizeof(double)))
        throw BadParams("snapshot truncated: " + path);
    return {std::move(f), t};
}

} // namespace el2d
