#include <doctest.h>

#include <cmath>
#include <random>

#include "el2d/coefficients.hpp"

using namespace el2d;

namespace {
LeslieCoefficients example_alphas() {
    LeslieCoefficients a;
    a.alpha1 = 0.0;
    a.alpha2 = -1.0;
    a.alpha3 = 2.0;
    a.alpha4 = 2.0;
    a.alpha5 = 0.0;
    a.alpha6 = 1.0;
    return a;
}
} // namespace

TEST_CASE("derive: reference coefficient set") {
    const DerivedCoefficients d = derive(example_alphas());
    CHECK(d.gamma1 == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(d.gamma2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.mu1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(d.mu2 == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(d.beta1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(d.beta2 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.beta3 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("derive: parodi violation") {
    LeslieCoefficients a;
    a.alpha2 = 1.0;
    a.alpha3 = 1.0;
    a.alpha5 = 1.0;
    a.alpha6 = 1.0;
    CHECK_THROWS_AS(derive(a), ParodiViolation);
}

TEST_CASE("derive: nonpositive gamma1") {
    LeslieCoefficients a;
    a.alpha2 = 2.0;
    a.alpha3 = 1.0;
    a.alpha5 = 0.0;
    a.alpha6 = -1.0;
    CHECK_THROWS_AS(derive(a), NonpositiveGamma1);
}

TEST_CASE("derive: scaling the alphas") {
    const LeslieCoefficients a = example_alphas();
    const double lam = 1.75;
    LeslieCoefficients as = a;
    as.alpha1 *= lam;
    as.alpha2 *= lam;
    as.alpha3 *= lam;
    as.alpha4 *= lam;
    as.alpha5 *= lam;
    as.alpha6 *= lam;
    const DerivedCoefficients d = derive(a);
    const DerivedCoefficients ds = derive(as);
    CHECK(ds.gamma1 == doctest::Approx(lam * d.gamma1).epsilon(1e-15));
    CHECK(ds.gamma2 == doctest::Approx(lam * d.gamma2).epsilon(1e-15));
    CHECK(ds.beta1 == doctest::Approx(lam * d.beta1).epsilon(1e-15));
    CHECK(ds.beta2 == doctest::Approx(lam * d.beta2).epsilon(1e-15));
    CHECK(ds.beta3 == doctest::Approx(lam * d.beta3).epsilon(1e-15));
    CHECK(ds.mu2 == doctest::Approx(d.mu2).epsilon(1e-15));
    CHECK(ds.mu1 == doctest::Approx(d.mu1 / lam).epsilon(1e-15));
}

TEST_CASE("admissible: closed form") {
    CHECK(admissible({1.0 / 3.0, 2.0, 2.0 / 3.0}, 2));
    CHECK(admissible({-1.0, 1.0, 0.0}, 2));
    CHECK_FALSE(admissible({-3.0, 1.0, 0.0}, 2));
    // borderline counts as admissible
    CHECK(admissible({0.0, 0.0, 0.0}, 2));
    CHECK(admissible({1.0, 1.0, 1.0}, 3));
    CHECK_FALSE(admissible({-10.0, 1.0, 0.0}, 3));
}

TEST_CASE("dissipation form: aligned and tilted directors") {
    const Betas b{5.0, 2.0, 7.0};
    const std::array<double, 9> D{1, 0, 0, 0, -1, 0, 0, 0, 0};
    CHECK(dissipation_form(b, {0, 0, 1}, D) == doctest::Approx(4.0).epsilon(1e-14));
    // n || x1: n.D.n = 1, D:D = 2, |Dn|^2 = 1 -> b1 + 2 b2 + b3
    CHECK(dissipation_form(b, {1, 0, 0}, D) == doctest::Approx(16.0).epsilon(1e-14));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(dissipation_form(b, {s, s, 0}, D) == doctest::Approx(11.0).epsilon(1e-14));
}

TEST_CASE("dissipation form: input validation") {
    const Betas b{1.0, 1.0, 1.0};
    const std::array<double, 9> D{1, 0, 0, 0, -1, 0, 0, 0, 0};
    CHECK_THROWS_AS(dissipation_form(b, {0, 0, 2}, D), NotUnit);
    const std::array<double, 9> asym{1, 0.5, 0, 0, -1, 0, 0, 0, 0};
    CHECK_THROWS_AS(dissipation_form(b, {0, 0, 1}, asym), NotSymmetricTraceFree);
    const std::array<double, 9> traced{1, 0, 0, 0, 1, 0, 0, 0, 0};
    CHECK_THROWS_AS(dissipation_form(b, {0, 0, 1}, traced), NotSymmetricTraceFree);
}

TEST_CASE("dissipation form: frame indifference about x3") {
    const Betas b{0.7, 1.3, -0.4};
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        double n[3] = {uni(rng), uni(rng), uni(rng)};
        const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        if (nn < 0.1) continue;
        for (double& v : n) v /= nn;
        const double x = uni(rng), y = uni(rng);
        const std::array<double, 9> D{x, y, 0, y, -x, 0, 0, 0, 0};
        const double f0 = dissipation_form(b, {n[0], n[1], n[2]}, D);

        const double th = uni(rng) * M_PI;
        const double ct = std::cos(th), st = std::sin(th);
        // rotate n and D by the same in-plane rotation
        const std::array<double, 3> nr{ct * n[0] - st * n[1], st * n[0] + ct * n[1], n[2]};
        std::array<double, 9> Dr{};
        const double R[2][2] = {{ct, -st}, {st, ct}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double acc = 0.0;
                for (int p = 0; p < 2; ++p)
                    for (int q = 0; q < 2; ++q) acc += R[i][p] * D[3 * p + q] * R[j][q];
                Dr[3 * i + j] = acc;
            }
        const double f1 = dissipation_form(b, nr, Dr);
        CHECK(f1 == doctest::Approx(f0).epsilon(1e-12));
    }
}

TEST_CASE("brute force agrees with the closed form off the boundary") {
    CHECK(admissible_bruteforce({1.0 / 3.0, 2.0, 2.0 / 3.0}, 10000, 2));
    CHECK_FALSE(admissible_bruteforce({-3.0, 1.0, 0.0}, 10000, 2));
    CHECK(admissible_bruteforce({0.0, 0.0, 0.0}, 10000, 2));

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    int tested = 0;
    while (tested < 30) {
        const Betas b{uni(rng), uni(rng), uni(rng)};
        const double margin =
            std::min(std::min(std::abs(b.beta2), std::abs(b.beta1)),
                     std::min(std::abs(b.beta1 + 2.0 * b.beta2 + b.beta3),
                              std::abs(2.0 * b.beta2 + b.beta3)));
        if (margin <= 1e-3) continue;
        ++tested;
        CHECK(admissible(b, 2) == admissible_bruteforce(b, 10000, 2, 555 + tested));
    }
}

TEST_CASE("brute force matches the closed form in 3-D") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    int tested = 0;
    while (tested < 10) {
        const Betas b{uni(rng), uni(rng), uni(rng)};
        const double margin =
            std::min(std::min(std::abs(b.beta2), std::abs(2.0 * b.beta2 + b.beta3)),
                     std::abs(1.5 * b.beta2 + b.beta3 + b.beta1));
        if (margin <= 1e-2) continue;
        ++tested;
        CHECK(admissible(b, 3) == admissible_bruteforce(b, 10000, 3, 888 + tested));
    }
}

TEST_CASE("admissible betas keep the planar form nonnegative") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    int found = 0;
    while (found < 10) {
        const Betas b{uni(rng), std::abs(uni(rng)), uni(rng)};
        if (!admissible(b, 2)) continue;
        ++found;
        for (int trial = 0; trial < 200; ++trial) {
            const double z = 2.0 * (ang(rng) / (2.0 * M_PI)) - 1.0;
            const double phi = ang(rng);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double alpha = ang(rng);
            const std::array<double, 9> D{std::cos(alpha), std::sin(alpha), 0,
                                          std::sin(alpha), -std::cos(alpha), 0,
                                          0, 0, 0};
            const double f = dissipation_form(b, {r * std::cos(phi), r * std::sin(phi), z}, D);
            CHECK(f >= -tol::form);
        }
    }
}

TEST_CASE("coefficients bundle validates gamma and reynolds") {
    LeslieCoefficients a = example_alphas();
    a.gamma = 1.5;
    CHECK_THROWS_AS(Coefficients{a}, ValidationError);
    a.gamma = 0.5;
    a.reynolds = -1.0;
    CHECK_THROWS_AS(Coefficients{a}, ValidationError);
}

TEST_CASE("elastic constants") {
    const ElasticConstants k(1.0, 1.2, 0.8);
    CHECK(k.a == 0.8);
    CHECK(k.k1 - k.a >= 0.0);
    CHECK(k.k2 - k.a >= 0.0);
    CHECK(k.k3 - k.a >= 0.0);
    CHECK_THROWS_AS(ElasticConstants(1.0, -1.0, 1.0), BadParams);
}
