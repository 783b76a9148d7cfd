// Acceptance suite: one binary, one pass/fail line per criterion.
//
// Every tolerance is pinned here. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "el2d/diagnostics.hpp"
#include "el2d/leslie_stress.hpp"
#include "el2d/orchestrate.hpp"
#include "el2d/random_fields.hpp"
#include "el2d/spectral.hpp"

using namespace el2d;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double now_seconds() {
    using clk = std::chrono::steady_clock;
    static const clk::time_point start = clk::now();
    return std::chrono::duration<double>(clk::now() - start).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// ---- shared corpus: seeded random smooth unit directors at N = 128 ----

struct CorpusEntry {
    Field n;
    ElasticConstants k;
};

const Grid& corpus_grid() {
    static Grid g(128, 2.0 * M_PI);
    return g;
}

const std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        const Grid& g = corpus_grid();
        for (int i = 0; i < 20; ++i) {
            std::mt19937_64 rng(9000 + i);
            std::uniform_real_distribution<double> uk(0.5, 2.0);
            const ElasticConstants k(uk(rng), uk(rng), uk(rng));
            out.push_back({random_director(g, 100 + i, 8, 0.35), k});
        }
        return out;
    }();
    return entries;
}

LeslieCoefficients reference_alphas() {
    LeslieCoefficients a;
    a.alpha1 = 0.0;
    a.alpha2 = -1.0;
    a.alpha3 = 2.0;
    a.alpha4 = 2.0;
    a.alpha5 = 0.0;
    a.alpha6 = 1.0;
    a.gamma = 0.5;
    a.reynolds = 4.0;
    return a;
}

State reference_initial(const Grid& g) {
    PresetParams p;
    p.amplitude = 0.5;
    p.velocity = VelocityPreset::taylor_green;
    p.velocity_amplitude = 0.3;
    return initial_preset("twist", p, g);
}

struct ReferenceRun {
    std::vector<EnergyLedgerRow> rows;
    RunResult result;
};

ReferenceRun reference_run(int n_grid, double dt, double t_end, int ledger_stride) {
    Grid g(n_grid, 2.0 * M_PI);
    const Coefficients c(reference_alphas());
    const ElasticConstants k(1.0, 0.9, 0.8);
    State s = reference_initial(g);
    SolverConfig cfg;
    cfg.dt = dt;
    ReferenceRun rr;
    std::vector<Observer> obs;
    obs.push_back({ledger_stride, [&](const State& st, long) {
                       if (rr.rows.empty() || st.t > rr.rows.back().t)
                           rr.rows.push_back(ledger(st, c, k));
                   }});
    rr.result = run(s, cfg, c, k, t_end, obs);
    return rr;
}

// ---- criteria ----

Outcome c1_molecular_field_oracle() {
    const double t0 = now_seconds();
    double worst = 0.0;
    for (const auto& e : corpus()) {
        const ElasticState st = make_elastic_state(e.n);
        const Field h = molecular_field(st, e.k);
        Field d = molecular_field_oracle(st, e.k);
        d -= h;
        worst = std::max(worst, l2_norm(d) / std::max(1e-300, l2_norm(h)));
    }
    const double secs = now_seconds() - t0;
    return {worst <= 1e-6 && secs <= 10.0,
            fmt("max rel L2 diff %.3e (tol 1e-6), %.1f s (limit 10 s)", worst, secs)};
}

Outcome c2_pointwise_identity() {
    double worst = 0.0;
    for (const auto& e : corpus()) {
        const ElasticState st = make_elastic_state(e.n);
        double gmax = 0.0;
        for (std::size_t t = 0; t < e.n.plane_size(); ++t) {
            double acc = 0.0;
            for (int q = 0; q < 6; ++q) acc += st.grad.comp(q)[t] * st.grad.comp(q)[t];
            gmax = std::max(gmax, acc);
        }
        const double r = linf_comp(wp_dot_n_residual(st, e.k), 0) / (1.0 + gmax);
        worst = std::max(worst, r);
    }
    return {worst <= 1e-6, fmt("max weighted Linf residual %.3e (tol 1e-6)", worst)};
}

Outcome c3_equal_constant_reduction() {
    double worst = 0.0;
    for (const auto& e : corpus()) {
        const double a = e.k.k1;
        const ElasticConstants keq(a, a, a);
        const ElasticState st = make_elastic_state(e.n);
        Field h = molecular_field(st, keq);
        h.axpy(-2.0 * a, st.lap);
        worst = std::max(worst, linf_norm(h));
    }
    return {worst <= 1e-10, fmt("max |h - 2a lap n| = %.3e (tol 1e-10)", worst)};
}

Outcome c4_admissibility_oracle() {
    const double t0 = now_seconds();
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    int kept = 0, disagree = 0;
    while (kept < 100) {
        const Betas b{uni(rng), uni(rng), uni(rng)};
        const double margin =
            std::min(std::min(std::abs(b.beta2), std::abs(b.beta1)),
                     std::min(std::abs(b.beta1 + 2.0 * b.beta2 + b.beta3),
                              std::abs(2.0 * b.beta2 + b.beta3)));
        if (margin <= 1e-3) continue;
        ++kept;
        if (admissible(b, 2) != admissible_bruteforce(b, 10000, 2, 77 * kept)) ++disagree;
    }
    const double secs = now_seconds() - t0;
    return {disagree == 0 && secs <= 5.0,
            fmt("%d/100 disagreements, %.2f s (limit 5 s)", disagree, secs)};
}

Outcome c5_stress_power() {
    const Grid& g = corpus_grid();
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        LeslieCoefficients al;
        al.alpha2 = -1.0 + 2.0 * uni(rng);
        al.alpha3 = al.alpha2 + 0.5 + 2.5 * uni(rng);
        al.alpha5 = -1.0 + 2.0 * uni(rng);
        al.alpha6 = al.alpha5 + al.alpha2 + al.alpha3;  // Parodi
        al.alpha1 = -1.0 + 2.0 * uni(rng);
        al.alpha4 = 0.5 + 1.5 * uni(rng);
        al.gamma = 0.3 + 0.4 * uni(rng);
        al.reynolds = 0.5 + 1.5 * uni(rng);
        const Coefficients c(al);
        const auto& e = corpus()[i];
        const Field v = spectral::leray_project(random_velocity(g, 300 + i, 10, 0.5));
        const State s{v, e.n, 0.0};
        const Field nt = director_rhs(s, c, e.k);
        const double resid = stress_power_residual(al, c.derived, v, e.n, nt, e.k);
        const Field dv = spectral::gradient(v);
        const ElasticState st = make_elastic_state(e.n);
        const Field h = molecular_field(st, e.k);
        const double scale = l2_norm(dv) * l2_norm(dv) + l2_norm(h) * l2_norm(h);
        worst = std::max(worst, resid / std::max(1e-300, scale));
    }
    return {worst <= 1e-6, fmt("max weighted residual %.3e (tol 1e-6)", worst)};
}

// shared by criteria 6, 8, 9
const ReferenceRun& main_run() {
    static ReferenceRun rr = reference_run(128, 1e-3, 1.0, 1);
    return rr;
}

Outcome c6_energy_law() {
    const double t0 = now_seconds();
    const ReferenceRun& rr = main_run();
    const double e0 = rr.rows.front().E;
    double worst_increase = 0.0;
    for (std::size_t i = 1; i < rr.rows.size(); ++i)
        worst_increase = std::max(worst_increase, rr.rows[i].E - rr.rows[i - 1].E);
    const double res_dt = energy_law_residual(rr.rows);

    const ReferenceRun half = reference_run(128, 5e-4, 1.0, 2);
    const double res_half = energy_law_residual(half.rows);

    // both residuals sit at the rounding floor of the balance at N = 128;
    // the refinement order is observed on the same physics at N = 32 where
    // the discretisation error is measurable
    const double floor = 1e-12;
    const bool refinement_ok = (res_half <= res_dt / 8.0) ||
                               (std::max(res_dt, res_half) <= floor);

    const auto coarse = reference_run(32, 4e-3, 1.0, 1);
    const auto fine = reference_run(32, 2e-3, 1.0, 1);
    const double factor = energy_law_residual(coarse.rows) /
                          std::max(1e-300, energy_law_residual(fine.rows));
    const double secs = now_seconds() - t0;

    const bool pass = worst_increase <= 1e-9 * e0 && refinement_ok && factor >= 8.0 &&
                      secs <= 120.0;
    return {pass, fmt("worst step dE %.2e (tol %.2e); residual %.2e -> %.2e under halving "
                      "(floor 1e-12); N=32 order factor %.1f (>= 8); %.0f s (limit 120 s)",
                      worst_increase, 1e-9 * e0, res_dt, res_half, factor, secs)};
}

Outcome c7_navier_stokes_reduction() {
    Grid g(32, 2.0 * M_PI);
    LeslieCoefficients a;
    a.alpha2 = -1.0;  // the only nonzero pair, inert on this configuration
    a.alpha3 = 1.0;
    a.gamma = 0.5;
    a.reynolds = 1.0;
    const Coefficients c(a);
    const ElasticConstants k(1.0, 1.0, 1.0);
    PresetParams p;
    p.amplitude = 0.8;
    p.b = {0.0, 0.0, 1.0};
    State s = initial_preset("taylor-green", p, g);
    const double v0 = l2_norm(s.v);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    const RunResult res = run(s, cfg, c, k, 1.0, {});
    const double expect = v0 * std::exp(-(a.gamma / a.reynolds) * 2.0 * 1.0);
    const double rel = std::abs(l2_norm(res.final_state.v) - expect) / expect;
    return {rel <= 1e-4, fmt("mode decay rel error %.3e (tol 1e-4)", rel)};
}

Outcome c8_unit_preservation() {
    // per-step pre-renormalisation drift on the reference configuration
    Grid g(128, 2.0 * M_PI);
    const Coefficients c(reference_alphas());
    const ElasticConstants k(1.0, 0.9, 0.8);
    const State s0 = reference_initial(g);
    auto one_step_drift = [&](double dt) {
        SolverConfig cfg;
        cfg.dt = dt;
        cfg.renormalize = false;
        (void)step(s0, cfg, c, k);
        return last_step_unit_drift();
    };
    const double d1 = one_step_drift(1e-3);
    const double d2 = one_step_drift(5e-4);
    const double ratio = d1 / std::max(1e-300, d2);
    // the cross-product structure keeps the drift at the rounding floor on
    // resolved data, which satisfies the O(dt^2) bound with a null constant
    const double floor = 1e-13;
    const bool drift_ok = (ratio >= 3.5) || (std::max(d1, d2) <= floor);

    const double post = main_run().result.max_unit_deviation;
    return {drift_ok && post <= 1e-12,
            fmt("pre-renorm drift %.2e -> %.2e (ratio %.2f, floor 1e-13); post-renorm max "
                "deviation %.2e (tol 1e-12)",
                d1, d2, ratio, post)};
}

Outcome c9_divergence() {
    const double worst = main_run().result.max_divergence;
    return {worst <= 1e-10, fmt("max ||div v||_inf over the run %.3e (tol 1e-10)", worst)};
}

Outcome c10_variational_consistency() {
    const Grid& g = corpus_grid();
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto& e = corpus()[i];
        const ElasticState st = make_elastic_state(e.n);
        const Field h = molecular_field(st, e.k);
        Field phi(g, 3);
        for (int l = 0; l < 3; ++l) {
            const Field r = random_scalar(g, 700 + 3 * i + l, 6, 0.5, 3.0);
            std::copy(r.comp(0), r.comp(0) + g.size(), phi.comp(l));
        }
        const double tau = 1e-5;
        auto energy_at = [&](double eps) {
            Field np = e.n;
            np.axpy(eps, phi);
            const ElasticState stp = make_elastic_state(normalized(np));
            return integral(density(stp, e.k));
        };
        const double fd = (energy_at(tau) - energy_at(-tau)) / (2.0 * tau);
        double pair = 0.0;
        for (std::size_t t = 0; t < g.size(); ++t) {
            const double nl[3] = {e.n.comp(0)[t], e.n.comp(1)[t], e.n.comp(2)[t]};
            const double ph[3] = {phi.comp(0)[t], phi.comp(1)[t], phi.comp(2)[t]};
            const double pn = ph[0] * nl[0] + ph[1] * nl[1] + ph[2] * nl[2];
            for (int l = 0; l < 3; ++l) pair += h.comp(l)[t] * (ph[l] - pn * nl[l]);
        }
        pair *= g.cell_area();
        worst = std::max(worst, std::abs(fd + pair) / std::max(1e-300, std::abs(pair)));
    }
    return {worst <= 1e-4, fmt("max rel mismatch %.3e over 10 perturbations (tol 1e-4)", worst)};
}

Outcome c11_monitors() {
    Grid g(64, 2.0 * M_PI);
    const Coefficients c(reference_alphas());
    const ElasticConstants k(1.0, 0.9, 0.8);
    PresetParams p;
    p.amplitude = 2.0;
    p.center = {M_PI, M_PI};
    p.width = 0.45;
    const State s0 = initial_preset("bump", p, g);

    const double R = 0.6;
    const int stride = 8;
    const double cell = g.length() / g.n();
    const ConcentrationMax cm0 = concentration_max(s0, R, stride);
    const bool located = std::abs(cm0.x1 - M_PI) <= stride * cell + 1e-12 &&
                         std::abs(cm0.x2 - M_PI) <= stride * cell + 1e-12;

    auto monitored_run = [&](double dt) {
        State s = s0;
        SolverConfig cfg;
        cfg.dt = dt;
        LocalMonitor mon(s, c, k, M_PI, M_PI, M_PI / 4.0);
        std::vector<double> ts, blow;
        std::vector<Observer> obs;
        obs.push_back({1, [&](const State& st, long) {
                           if (!ts.empty() && st.t <= ts.back()) return;
                           ts.push_back(st.t);
                           blow.push_back(blowup_indicator(st));
                           mon.observe(st);
                       }});
        run(s, cfg, c, k, 0.3, obs);
        const double integral_blowup = cumulative_integral(ts, blow).back();
        return std::pair<double, double>(mon.report().sup_rho, integral_blowup);
    };
    const auto [rho1, blow1] = monitored_run(2e-3);
    const auto [rho2, blow2] = monitored_run(1e-3);
    const double scale = std::max(std::abs(rho1), std::abs(rho2));
    const double change = scale > 1e-12 ? std::abs(rho1 - rho2) / scale : 0.0;
    const bool pass = located && std::isfinite(blow1) && std::isfinite(blow2) &&
                      std::isfinite(rho1) && std::isfinite(rho2) && change < 0.10;
    return {pass, fmt("bump argmax (%.2f, %.2f) vs (pi, pi); blowup integral %.3e; sup rho "
                      "%.4e -> %.4e (change %.2f%%, limit 10%%)",
                      cm0.x1, cm0.x2, blow1, rho1, rho2, 100.0 * change)};
}

Outcome c12_determinism() {
    RunConfig cfg;
    cfg.grid_n = 32;
    cfg.grid_length = 2.0 * M_PI;
    cfg.coeffs = reference_alphas();
    cfg.k1 = 1.0;
    cfg.k2 = 0.9;
    cfg.k3 = 0.8;
    cfg.solver.dt = 2e-3;
    cfg.t_end = 0.1;
    cfg.preset = "twist";
    cfg.preset_params.amplitude = 0.5;
    cfg.preset_params.velocity = VelocityPreset::taylor_green;
    cfg.preset_params.velocity_amplitude = 0.3;
    cfg.monitors.points.push_back({M_PI, M_PI});

    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::filesystem::remove_all("accept_det_a");
    std::filesystem::remove_all("accept_det_b");
    run_simulation(cfg, "accept_det_a", true);
    run_simulation(cfg, "accept_det_b", true);
    const std::string a = slurp("accept_det_a/ledger.csv");
    const std::string b = slurp("accept_det_b/ledger.csv");
    const bool same = !a.empty() && a == b;
    std::filesystem::remove_all("accept_det_a");
    std::filesystem::remove_all("accept_det_b");
    return {same, fmt("ledger CSVs byte-identical: %s (%zu bytes)", same ? "yes" : "no",
                      a.size())};
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    struct Entry {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "molecular-field oracle equivalence", c1_molecular_field_oracle},
        {2, "(div w_p).n pointwise identity", c2_pointwise_identity},
        {3, "equal-constant reduction h = 2a lap n", c3_equal_constant_reduction},
        {4, "admissibility closed form vs brute force", c4_admissibility_oracle},
        {5, "stress-power identity", c5_stress_power},
        {6, "energy law of the coupled run", c6_energy_law},
        {7, "navier-stokes reduction decay", c7_navier_stokes_reduction},
        {8, "unit-length preservation", c8_unit_preservation},
        {9, "divergence-free velocity", c9_divergence},
        {10, "variational consistency of h", c10_variational_consistency},
        {11, "concentration/blowup/monotonicity monitors", c11_monitors},
        {12, "determinism of the ledger", c12_determinism},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        if (only > 0 && e.id != only) continue;
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", e.id, e.name,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
