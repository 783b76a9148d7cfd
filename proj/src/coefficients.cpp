#include "el2d/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace el2d {

ElasticConstants::ElasticConstants(double k1_, double k2_, double k3_)
    : k1(k1_), k2(k2_), k3(k3_), a(std::min({k1_, k2_, k3_})) {
    if (!(k1 > 0.0 && k2 > 0.0 && k3 > 0.0))
        throw BadParams("elastic constants must be positive");
}

DerivedCoefficients derive(const LeslieCoefficients& c) {
    const double gamma1 = c.alpha3 - c.alpha2;
    auto reject_gamma1 = [&] {
        std::ostringstream os;
        os << "gamma1 = a3-a2 = " << gamma1 << " must be positive";
        throw NonpositiveGamma1(os.str());
    };
    if (gamma1 < 0.0) reject_gamma1();
    const double parodi_defect = c.alpha2 + c.alpha3 - (c.alpha6 - c.alpha5);
    if (std::abs(parodi_defect) > tol::parodi) {
        std::ostringstream os;
        os << "Parodi relation violated: a2+a3-(a6-a5) = " << parodi_defect;
        throw ParodiViolation(os.str());
    }
    if (gamma1 == 0.0) reject_gamma1();
    DerivedCoefficients d;
    d.gamma1 = gamma1;
    d.gamma2 = c.alpha6 - c.alpha5;
    d.mu1 = 1.0 / gamma1;
    d.mu2 = -d.gamma2 / gamma1;
    d.beta1 = c.alpha1 + d.gamma2 * d.gamma2 / gamma1;
    d.beta2 = c.alpha4;
    d.beta3 = c.alpha5 + c.alpha6 - d.gamma2 * d.gamma2 / gamma1;
    return d;
}

bool admissible(const Betas& b, int dim) {
    if (dim == 3) {
        return b.beta2 >= 0.0 && 2.0 * b.beta2 + b.beta3 >= 0.0 &&
               1.5 * b.beta2 + b.beta3 + b.beta1 >= 0.0;
    }
    if (dim == 2) {
        if (b.beta1 < 0.0)
            return b.beta2 >= 0.0 && b.beta1 + 2.0 * b.beta2 + b.beta3 >= 0.0;
        return b.beta2 >= 0.0 && 2.0 * b.beta2 + b.beta3 >= 0.0;
    }
    throw BadParams("dim must be 2 or 3");
}

double dissipation_form(const Betas& b, const std::array<double, 3>& n,
                        const std::array<double, 9>& D) {
    const double nrm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(nrm - 1.0) > tol::unit)
        throw NotUnit("dissipation_form: |n| != 1");
    double trace = D[0] + D[4] + D[8];
    if (std::abs(trace) > tol::sym)
        throw NotSymmetricTraceFree("dissipation_form: tr D != 0");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(D[3 * i + j] - D[3 * j + i]) > tol::sym)
                throw NotSymmetricTraceFree("dissipation_form: D not symmetric");

    std::array<double, 3> Dn{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            Dn[i] += D[3 * i + j] * n[j];
    const double nDn = n[0] * Dn[0] + n[1] * Dn[1] + n[2] * Dn[2];
    double DD = 0.0;
    for (double v : D) DD += v * v;
    const double Dn2 = Dn[0] * Dn[0] + Dn[1] * Dn[1] + Dn[2] * Dn[2];
    return b.beta1 * nDn * nDn + b.beta2 * DD + b.beta3 * Dn2;
}

namespace {

std::array<double, 9> planar_d(double alpha) {
    const double x = std::cos(alpha), y = std::sin(alpha);
    return {x, y, 0.0, y, -x, 0.0, 0.0, 0.0, 0.0};
}

std::array<double, 3> sphere_point(double t, double psi, double sign) {
    // |n_12| = t, azimuth psi, vertical component carries the leftover norm
    const double n3 = sign * std::sqrt(std::max(0.0, 1.0 - t * t));
    return {t * std::cos(psi), t * std::sin(psi), n3};
}

} // namespace

bool admissible_bruteforce(const Betas& b, std::int64_t samples, int dim,
                           std::uint64_t seed) {
    if (samples < 10000) throw BadParams("admissible_bruteforce needs >= 10^4 samples");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double min_val = 0.0;

    auto consider = [&](const std::array<double, 3>& n, const std::array<double, 9>& D) {
        min_val = std::min(min_val, dissipation_form(b, n, D));
    };

    if (dim == 2) {
        for (std::int64_t s = 0; s < samples; ++s) {
            const double alpha = 2.0 * M_PI * uni(rng);
            // uniform on S^2
            const double z = 2.0 * uni(rng) - 1.0;
            const double phi = 2.0 * M_PI * uni(rng);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            consider({r * std::cos(phi), r * std::sin(phi), z}, planar_d(alpha));
        }
        // Deterministic sweep over the extremal configurations of the planar
        // form: for each in-plane fraction t and azimuth psi the strain angle
        // alpha = 2*psi aligns the squared term, alpha = 2*psi + pi/2 kills it.
        const int n_t = 33, n_psi = 16;
        for (int it = 0; it <= n_t; ++it) {
            const double t = double(it) / n_t;
            for (int ip = 0; ip < n_psi; ++ip) {
                const double psi = 2.0 * M_PI * ip / n_psi;
                const auto n = sphere_point(t, psi, 1.0);
                consider(n, planar_d(2.0 * psi));
                consider(n, planar_d(2.0 * psi + M_PI / 2.0));
            }
        }
    } else if (dim == 3) {
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (std::int64_t s = 0; s < samples; ++s) {
            std::array<double, 9> D{};
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) {
                    const double g = gauss(rng);
                    D[3 * i + j] = g;
                    D[3 * j + i] = g;
                }
            const double tr = (D[0] + D[4] + D[8]) / 3.0;
            D[0] -= tr; D[4] -= tr; D[8] -= tr;
            double nrm = 0.0;
            for (double v : D) nrm += v * v;
            nrm = std::sqrt(nrm);
            if (nrm < 1e-12) continue;
            for (double& v : D) v /= nrm;
            const double z = 2.0 * uni(rng) - 1.0;
            const double phi = 2.0 * M_PI * uni(rng);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            consider({r * std::cos(phi), r * std::sin(phi), z}, D);
        }
        // canonical extremisers of the three 3-D constraints
        const double s2 = 1.0 / std::sqrt(2.0), s6 = 1.0 / std::sqrt(6.0);
        consider({0.0, 0.0, 1.0}, {s2, 0, 0, 0, -s2, 0, 0, 0, 0});             // beta2
        consider({1.0, 0.0, 0.0}, {0, s2, 0, s2, 0, 0, 0, 0, 0});              // 2b2+b3
        consider({1.0, 0.0, 0.0}, {2 * s6, 0, 0, 0, -s6, 0, 0, 0, -s6});       // 1.5b2+b3+b1
    } else {
        throw BadParams("dim must be 2 or 3");
    }
    return min_val >= -tol::form;
}

} // namespace el2d
