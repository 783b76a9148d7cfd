#include "el2d/presets.hpp"

#include <cmath>

#include "el2d/snapshot.hpp"
#include "el2d/spectral.hpp"

namespace el2d {

namespace {

Field uniform_director(const Grid& g, const std::array<double, 3>& b) {
    const double nb = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    if (nb < 1e-12) throw BadParams("preset: far-field director must be nonzero");
    Field n(g, 3);
    for (int l = 0; l < 3; ++l)
        for (std::size_t t = 0; t < g.size(); ++t) n.comp(l)[t] = b[l] / nb;
    return n;
}

Field taylor_green_velocity(const Grid& g, double A) {
    Field v(g, 2);
    const double k = 2.0 * M_PI / g.length();
    for (int i = 0; i < g.n(); ++i) {
        const double x = g.x1(i);
        for (int j = 0; j < g.n(); ++j) {
            const double y = g.x2(j);
            v.at(0, i, j) = A * std::sin(k * x) * std::cos(k * y);
            v.at(1, i, j) = -A * std::cos(k * x) * std::sin(k * y);
        }
    }
    return v;
}

} // namespace

State initial_preset(const std::string& name, const PresetParams& p, const Grid& g) {
    Field v(g, 2);
    Field n(g, 3);
    const double L = g.length();

    if (name == "uniform") {
        n = uniform_director(g, p.b);
    } else if (name == "taylor-green") {
        n = uniform_director(g, p.b);
        const double A = (p.velocity_amplitude != 0.0) ? p.velocity_amplitude : p.amplitude;
        if (A == 0.0) throw BadParams("taylor-green preset needs a nonzero amplitude");
        v = taylor_green_velocity(g, A);
    } else if (name == "twist") {
        for (int i = 0; i < g.n(); ++i) {
            const double th = p.amplitude * std::sin(2.0 * M_PI * g.x1(i) / L);
            for (int j = 0; j < g.n(); ++j) {
                n.at(0, i, j) = std::cos(th);
                n.at(1, i, j) = std::sin(th);
                n.at(2, i, j) = 0.0;
            }
        }
    } else if (name == "bump") {
        const double nb = std::sqrt(p.b[0] * p.b[0] + p.b[1] * p.b[1] + p.b[2] * p.b[2]);
        if (nb < 1e-12) throw BadParams("preset: far-field director must be nonzero");
        const double b0[3] = {p.b[0] / nb, p.b[1] / nb, p.b[2] / nb};
        // perturbation direction orthogonal to b
        double e[3] = {0.0, 0.0, 1.0};
        if (std::abs(b0[2]) > 0.9) e[0] = 1.0, e[2] = 0.0;
        double u[3] = {b0[1] * e[2] - b0[2] * e[1], b0[2] * e[0] - b0[0] * e[2],
                       b0[0] * e[1] - b0[1] * e[0]};
        const double un = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
        for (double& c : u) c /= un;

        const double w = (p.width > 0.0) ? p.width : L / 16.0;
        const double cx = (p.center[0] != 0.0 || p.center[1] != 0.0) ? p.center[0] : L / 2.0;
        const double cy = (p.center[0] != 0.0 || p.center[1] != 0.0) ? p.center[1] : L / 2.0;
        if (p.amplitude == 0.0) throw BadParams("bump preset needs a nonzero amplitude");
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j) {
                // wrapped gaussian (one image ring keeps it smooth across edges)
                double bump = 0.0;
                for (int ox = -1; ox <= 1; ++ox)
                    for (int oy = -1; oy <= 1; ++oy) {
                        const double dx = g.x1(i) - cx + ox * L;
                        const double dy = g.x2(j) - cy + oy * L;
                        bump += std::exp(-(dx * dx + dy * dy) / (2.0 * w * w));
                    }
                const double a = p.amplitude * bump;
                for (int l = 0; l < 3; ++l) n.at(l, i, j) = b0[l] + a * u[l];
            }
    } else if (name == "snapshot") {
        if (p.snapshot_prefix.empty()) throw BadParams("snapshot preset needs a path prefix");
        const LoadedSnapshot sv = read_snapshot(p.snapshot_prefix + "_v.el2", g);
        const LoadedSnapshot sn = read_snapshot(p.snapshot_prefix + "_n.el2", g);
        if (sv.field.comps() != 2 || sn.field.comps() != 3)
            throw BadParams("snapshot preset: component mismatch");
        return make_state(sv.field, sn.field, sv.t);
    } else {
        throw UnknownPreset("unknown initial preset: " + name);
    }

    if (name != "taylor-green" && p.velocity == VelocityPreset::taylor_green)
        v = taylor_green_velocity(g, p.velocity_amplitude);

    return make_state(std::move(v), std::move(n), 0.0);
}

} // namespace el2d
