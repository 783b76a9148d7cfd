#include "el2d/random_fields.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "el2d/oseen_frank.hpp"
#include "el2d/spectral.hpp"

namespace el2d {

Field random_scalar(const Grid& g, std::uint64_t seed, int max_mode, double amplitude,
                    double decay) {
    if (max_mode < 1 || max_mode >= g.n() / 2) throw BadParams("random_scalar: bad max_mode");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Field f(g, 1);
    // real mode sum keeps the field exactly band-limited and hermitian
    for (int m1 = -max_mode; m1 <= max_mode; ++m1)
        for (int m2 = 0; m2 <= max_mode; ++m2) {
            if (m2 == 0 && m1 <= 0) continue;  // one representative per conjugate pair
            const double mm = double(m1) * m1 + double(m2) * m2;
            const double amp = amplitude * std::exp(-mm / (decay * decay));
            const double phase = 2.0 * M_PI * uni(rng);
            const double mag = amp * (0.5 + 0.5 * uni(rng));
            const double kx = 2.0 * M_PI * m1 / g.length();
            const double ky = 2.0 * M_PI * m2 / g.length();
            for (int i = 0; i < g.n(); ++i) {
                const double x = g.x1(i);
                for (int j = 0; j < g.n(); ++j) {
                    f.at(0, i, j) += mag * std::cos(kx * x + ky * g.x2(j) + phase);
                }
            }
        }
    return f;
}

Field random_director(const Grid& g, std::uint64_t seed, int max_mode, double amplitude,
                      const std::array<double, 3>& b) {
    const double nb = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    if (nb < 1e-12) throw BadParams("random_director: base direction must be nonzero");
    // band-limited random angles keep |n| = 1 exact and the spectrum of the
    // trig composition decays superexponentially
    const double theta0 = std::atan2(b[1] / nb, b[0] / nb);
    const double phi0 = std::asin(std::clamp(b[2] / nb, -1.0, 1.0));
    const double decay = std::max(2.0, max_mode / 2.0);
    const Field dth = random_scalar(g, seed + 1000003ULL, max_mode, amplitude, decay);
    const Field dph = random_scalar(g, seed + 2000003ULL, max_mode, 0.7 * amplitude, decay);
    Field n(g, 3);
    for (std::size_t t = 0; t < g.size(); ++t) {
        const double th = theta0 + dth.comp(0)[t];
        const double ph = phi0 + dph.comp(0)[t];
        n.comp(0)[t] = std::cos(th) * std::cos(ph);
        n.comp(1)[t] = std::sin(th) * std::cos(ph);
        n.comp(2)[t] = std::sin(ph);
    }
    return n;
}

Field random_velocity(const Grid& g, std::uint64_t seed, int max_mode, double amplitude) {
    const Field psi = random_scalar(g, seed, max_mode, amplitude,
                                    std::max(2.0, max_mode / 2.0));
    const Field dpsi = spectral::gradient(psi);
    Field v(g, 2);
    for (std::size_t t = 0; t < g.size(); ++t) {
        v.comp(0)[t] = -dpsi.comp(1)[t];  // -d2 psi
        v.comp(1)[t] = dpsi.comp(0)[t];   //  d1 psi
    }
    return v;
}

} // namespace el2d
