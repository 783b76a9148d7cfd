#include <doctest.h>

#include <cmath>
#include <random>

#include "el2d/oseen_frank.hpp"
#include "el2d/random_fields.hpp"
#include "el2d/spectral.hpp"

using namespace el2d;

namespace {

Field constant_director(const Grid& g, double a, double b, double c) {
    Field n(g, 3);
    const double r = std::sqrt(a * a + b * b + c * c);
    for (std::size_t t = 0; t < g.size(); ++t) {
        n.comp(0)[t] = a / r;
        n.comp(1)[t] = b / r;
        n.comp(2)[t] = c / r;
    }
    return n;
}

Field twist_director(const Grid& g, double amplitude) {
    Field n(g, 3);
    for (int i = 0; i < g.n(); ++i) {
        const double th = amplitude * std::sin(2.0 * M_PI * g.x1(i) / g.length());
        for (int j = 0; j < g.n(); ++j) {
            n.at(0, i, j) = std::cos(th);
            n.at(1, i, j) = std::sin(th);
            n.at(2, i, j) = 0.0;
        }
    }
    return n;
}

// reduced density as an independent pointwise function of (n, grad n):
// a|P|^2 + (k1-a)(div)^2 + (k2-a)|curl|^2 + (k3-k2)(n.curl)^2
double reduced_density(const double n[3], const double grad[6], const ElasticConstants& k) {
    double p2 = 0.0;
    for (int q = 0; q < 6; ++q) p2 += grad[q] * grad[q];
    const double div = grad[0] + grad[3 + 1];
    const double curl[3] = {grad[3 + 2], -grad[2], grad[1] - grad[3 + 0]};
    const double c2 = curl[0] * curl[0] + curl[1] * curl[1] + curl[2] * curl[2];
    const double ndc = n[0] * curl[0] + n[1] * curl[1] + n[2] * curl[2];
    return k.a * p2 + (k.k1 - k.a) * div * div + (k.k2 - k.a) * c2 +
           (k.k3 - k.k2) * ndc * ndc;
}

} // namespace

TEST_CASE("density: constant director has zero energy") {
    Grid g(32, 2.0 * M_PI);
    const ElasticState st = make_elastic_state(constant_director(g, 0.3, -0.2, 0.9));
    CHECK(linf_comp(density(st, ElasticConstants(1.0, 1.5, 0.7)), 0) < 1e-20);
}

TEST_CASE("density: equal constants reduce to a|grad n|^2") {
    Grid g(64, 2.0 * M_PI);
    const Field n = random_director(g, 3, 8, 0.5);
    const ElasticState st = make_elastic_state(n);
    const ElasticConstants k(1.3, 1.3, 1.3);
    const Field w = density(st, k);
    double worst = 0.0;
    for (std::size_t t = 0; t < g.size(); ++t) {
        double p2 = 0.0;
        for (int q = 0; q < 6; ++q) p2 += st.grad.comp(q)[t] * st.grad.comp(q)[t];
        worst = std::max(worst, std::abs(w.comp(0)[t] - 1.3 * p2));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("density: twist profile matches the closed form") {
    Grid g(128, 2.0 * M_PI);
    const double A = 0.5;
    const ElasticState st = make_elastic_state(twist_director(g, A));
    const ElasticConstants k(1.0, 1.4, 0.8);
    const Field w = density(st, k);
    double worst = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        const double th = A * std::sin(g.x1(i));
        const double thp = A * std::cos(g.x1(i));
        const double expect = k.a * thp * thp +
                              (k.k1 - k.a) * thp * thp * std::sin(th) * std::sin(th) +
                              (k.k2 - k.a) * thp * thp * std::cos(th) * std::cos(th);
        for (int j = 0; j < g.n(); ++j)
            worst = std::max(worst, std::abs(w.at(0, i, j) - expect));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("energy lower bound a int |grad n|^2") {
    Grid g(48, 2.0 * M_PI);
    const ElasticConstants k(1.1, 0.9, 1.7);
    for (int s = 0; s < 5; ++s) {
        const Field n = random_director(g, 100 + s, 8, 0.6);
        const ElasticState st = make_elastic_state(n);
        double grad_sq = 0.0;
        for (int q = 0; q < 6; ++q)
            for (std::size_t t = 0; t < g.size(); ++t)
                grad_sq += st.grad.comp(q)[t] * st.grad.comp(q)[t];
        grad_sq *= g.cell_area();
        const double W = integral(density(st, k));
        CHECK(W >= k.a * grad_sq - 1e-10 * std::max(1.0, W));
        CHECK(W >= 0.0);
    }
}

TEST_CASE("w_p: constant director, equal constants, FD oracle") {
    Grid g(32, 2.0 * M_PI);
    const ElasticConstants k(1.0, 1.3, 0.6);
    const ElasticState c0 = make_elastic_state(constant_director(g, 1, 0, 0));
    CHECK(linf_norm(w_p(c0, k)) < 1e-20);

    const Field n = random_director(g, 7, 6, 0.5);
    const ElasticState st = make_elastic_state(n);
    const ElasticConstants keq(0.9, 0.9, 0.9);
    const Field wpe = w_p(st, keq);
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int l = 0; l < 3; ++l)
            for (std::size_t t = 0; t < g.size(); ++t) {
                const double expect = (a < 2) ? 1.8 * st.grad.comp(a * 3 + l)[t] : 0.0;
                worst = std::max(worst, std::abs(wpe.comp(a * 3 + l)[t] - expect));
            }
    CHECK(worst < 1e-12);

    // central finite differences of the reduced density in the gradient slot
    const Field wp_full = w_p(st, k);
    const double eps = 1e-6;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, int(g.size()) - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t t = pick(rng);
        double nl[3], grad[6];
        for (int l = 0; l < 3; ++l) nl[l] = st.n.comp(l)[t];
        for (int q = 0; q < 6; ++q) grad[q] = st.grad.comp(q)[t];
        const int a = trial % 2, l = (trial / 2) % 3;
        double gp[6], gm[6];
        std::copy(grad, grad + 6, gp);
        std::copy(grad, grad + 6, gm);
        gp[a * 3 + l] += eps;
        gm[a * 3 + l] -= eps;
        const double fd =
            (reduced_density(nl, gp, k) - reduced_density(nl, gm, k)) / (2.0 * eps);
        CHECK(wp_full.comp(a * 3 + l)[t] == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("w_n: vanishing cases and FD oracle") {
    Grid g(32, 2.0 * M_PI);
    // equal k2 = k3 kills w_n
    const Field n = random_director(g, 9, 6, 0.5);
    const ElasticState st = make_elastic_state(n);
    CHECK(linf_norm(w_n(st, ElasticConstants(1.4, 1.1, 1.1))) < 1e-20);

    // in-plane twist has n.curl n = 0 pointwise
    const ElasticState tw = make_elastic_state(twist_director(g, 0.6));
    CHECK(linf_norm(w_n(tw, ElasticConstants(1.0, 1.2, 0.7))) < 1e-10);

    // FD of the reduced density in the n slot at fixed gradient
    const ElasticConstants k(1.0, 1.3, 0.6);
    const Field wn = w_n(st, k);
    const double eps = 1e-6;
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> pick(0, int(g.size()) - 1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t t = pick(rng);
        double nl[3], grad[6];
        for (int l = 0; l < 3; ++l) nl[l] = st.n.comp(l)[t];
        for (int q = 0; q < 6; ++q) grad[q] = st.grad.comp(q)[t];
        const int l = trial % 3;
        double np[3], nm[3];
        std::copy(nl, nl + 3, np);
        std::copy(nl, nl + 3, nm);
        np[l] += eps;
        nm[l] -= eps;
        const double fd = (reduced_density(np, grad, k) - reduced_density(nm, grad, k)) /
                          (2.0 * eps);
        CHECK(wn.comp(l)[t] == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
}

TEST_CASE("molecular field: constant and equal-constant reductions") {
    Grid g(64, 2.0 * M_PI);
    const ElasticConstants k(1.2, 0.9, 1.5);
    const ElasticState c0 = make_elastic_state(constant_director(g, 0, 1, 0));
    CHECK(linf_norm(molecular_field(c0, k)) < 1e-20);

    const Field n = random_director(g, 23, 8, 0.5);
    const ElasticState st = make_elastic_state(n);
    const double a = 0.85;
    const ElasticConstants keq(a, a, a);
    Field h = molecular_field(st, keq);
    h.axpy(-2.0 * a, st.lap);
    CHECK(linf_norm(h) < 1e-10);
}

TEST_CASE("molecular field routes agree") {
    Grid g(64, 2.0 * M_PI);
    for (int s = 0; s < 5; ++s) {
        const ElasticConstants k(0.6 + 0.3 * s, 1.2, 0.9);
        const Field n = random_director(g, 31 + s, 8, 0.5);
        const ElasticState st = make_elastic_state(n);
        const Field h = molecular_field(st, k);
        Field diff_div = molecular_field_oracle(st, k);
        diff_div -= h;
        const double rel = l2_norm(diff_div) / std::max(1e-300, l2_norm(h));
        CHECK(rel < 1e-6);

        // the unit-length-free form agrees on unit directors
        Field diff_gen = molecular_field_general(st, k);
        diff_gen -= h;
        const double rel_gen = l2_norm(diff_gen) / std::max(1e-300, l2_norm(h));
        CHECK(rel_gen < 1e-8);
    }
}

TEST_CASE("pointwise (div w_p).n identity") {
    Grid g(64, 2.0 * M_PI);
    const ElasticConstants k(1.0, 1.3, 0.7);

    const ElasticState c0 = make_elastic_state(constant_director(g, 1, 0, 0));
    CHECK(linf_comp(wp_dot_n_residual(c0, k), 0) < 1e-20);

    // equal constants reduce the identity to the differentiated unit norm
    const Field n = random_director(g, 41, 4, 0.5);
    const ElasticState st = make_elastic_state(n);
    CHECK(linf_comp(wp_dot_n_residual(st, ElasticConstants(1.1, 1.1, 1.1)), 0) < 1e-8);

    double gradn_max = 0.0;
    for (std::size_t t = 0; t < g.size(); ++t) {
        double acc = 0.0;
        for (int q = 0; q < 6; ++q) acc += st.grad.comp(q)[t] * st.grad.comp(q)[t];
        gradn_max = std::max(gradn_max, acc);
    }
    CHECK(linf_comp(wp_dot_n_residual(st, k), 0) < 1e-6 * (1.0 + gradn_max));
}

TEST_CASE("variational consistency of the molecular field") {
    Grid g(48, 2.0 * M_PI);
    const ElasticConstants k(1.0, 1.4, 0.8);
    const Field n = random_director(g, 51, 6, 0.5);
    const ElasticState st = make_elastic_state(n);
    const Field h = molecular_field(st, k);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 4; ++trial) {
        Field phi(g, 3);
        for (int l = 0; l < 3; ++l) {
            const Field r = random_scalar(g, 500 + 7 * trial + l, 5, 0.5, 3.0);
            std::copy(r.comp(0), r.comp(0) + g.size(), phi.comp(l));
        }
        const double tau = 1e-5;
        auto energy_at = [&](double eps) {
            Field np = n;
            np.axpy(eps, phi);
            const ElasticState stp = make_elastic_state(normalized(np));
            return integral(density(stp, k));
        };
        const double fd = (energy_at(tau) - energy_at(-tau)) / (2.0 * tau);
        // pairing with the tangential part of the perturbation
        double pair = 0.0;
        for (std::size_t t = 0; t < g.size(); ++t) {
            const double nl[3] = {n.comp(0)[t], n.comp(1)[t], n.comp(2)[t]};
            const double ph[3] = {phi.comp(0)[t], phi.comp(1)[t], phi.comp(2)[t]};
            const double pn = ph[0] * nl[0] + ph[1] * nl[1] + ph[2] * nl[2];
            for (int l = 0; l < 3; ++l)
                pair += h.comp(l)[t] * (ph[l] - pn * nl[l]);
        }
        pair *= g.cell_area();
        CHECK(fd == doctest::Approx(-pair).epsilon(1e-4));
    }
}

TEST_CASE("normalized guards the zero director") {
    Grid g(16, 1.0);
    Field n(g, 3);
    CHECK_THROWS_AS(normalized(n), BadParams);
}

TEST_CASE("cached gradient satisfies the differentiated unit constraint") {
    Grid g(64, 2.0 * M_PI);
    const Field n = random_director(g, 61, 4, 0.5);
    const ElasticState st = make_elastic_state(n);
    double worst = 0.0;
    for (std::size_t t = 0; t < g.size(); ++t)
        for (int a = 0; a < 2; ++a) {
            double dot = 0.0;
            for (int l = 0; l < 3; ++l) dot += n.comp(l)[t] * st.grad.comp(a * 3 + l)[t];
            worst = std::max(worst, std::abs(dot));
        }
    CHECK(worst < 1e-10);

    // the cache agrees with a fresh spectral gradient
    const Field fresh = spectral::gradient(n);
    Field d = fresh;
    d -= st.grad;
    CHECK(linf_norm(d) < 1e-12);
}
