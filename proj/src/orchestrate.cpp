#include "el2d/orchestrate.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "el2d/leslie_stress.hpp"
#include "el2d/random_fields.hpp"
#include "el2d/snapshot.hpp"
#include "el2d/spectral.hpp"

namespace el2d {

namespace fs = std::filesystem;

namespace {

void write_coefficient_report(const std::string& path, const Coefficients& c) {
    std::ofstream out(path);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "gamma1 = %.17g\ngamma2 = %.17g\nmu1 = %.17g\nmu2 = %.17g\n"
                  "beta1 = %.17g\nbeta2 = %.17g\nbeta3 = %.17g\n",
                  c.derived.gamma1, c.derived.gamma2, c.derived.mu1, c.derived.mu2,
                  c.derived.beta1, c.derived.beta2, c.derived.beta3);
    out << buf;
    const Betas b{c.derived.beta1, c.derived.beta2, c.derived.beta3};
    out << "admissible (2-D): " << (admissible(b, 2) ? "yes" : "no") << "\n";
    out << "admissible (3-D): " << (admissible(b, 3) ? "yes" : "no") << "\n";
}

} // namespace

RunArtifacts run_simulation(const RunConfig& cfg, const std::string& out_dir_override,
                            bool quiet) {
    const std::string out_dir =
        out_dir_override.empty() ? cfg.output.directory : out_dir_override;
    fs::create_directories(out_dir);

    Grid grid(cfg.grid_n, cfg.grid_length);
    const Coefficients coeffs(cfg.coeffs);
    const ElasticConstants elastic(cfg.k1, cfg.k2, cfg.k3);

    {
        std::ofstream echo(out_dir + "/config_echo.txt");
        echo << config_echo(cfg);
    }
    write_coefficient_report(out_dir + "/coefficients.txt", coeffs);
    const Betas betas{coeffs.derived.beta1, coeffs.derived.beta2, coeffs.derived.beta3};
    if (!admissible(betas, 2) && !quiet)
        std::cerr << "warning: coefficients are not dissipative in 2-D; "
                     "the energy ledger may grow\n";
    const double h2 = grid.dx() * grid.dx();
    const double dt_guide = 0.3 * std::min(h2 * cfg.coeffs.reynolds / cfg.coeffs.gamma,
                                           h2 / (2.0 * elastic.a * coeffs.derived.mu1));
    if (cfg.solver.dt > dt_guide && !quiet)
        std::cerr << "warning: dt = " << cfg.solver.dt << " exceeds the stability guide "
                  << dt_guide << " for this grid\n";

    State state = initial_preset(cfg.preset, cfg.preset_params, grid);

    const double mon_radius =
        cfg.monitors.radius > 0.0 ? cfg.monitors.radius : cfg.grid_length / 8.0;
    const int mon_stride = cfg.monitors.stride > 0 ? cfg.monitors.stride : cfg.grid_n / 8;

    std::vector<LocalMonitor> monitors;
    monitors.reserve(cfg.monitors.points.size());
    for (const auto& p : cfg.monitors.points)
        monitors.emplace_back(state, coeffs, elastic, p[0], p[1], mon_radius);

    RunArtifacts art;
    art.out_dir = out_dir;

    std::vector<LedgerCsvRow> rows;
    std::vector<EnergyLedgerRow> core_rows;
    auto ledger_observer = [&](const State& s, long) {
        EnergyLedgerRow core = ledger(s, coeffs, elastic);
        core_rows.push_back(core);
        LedgerCsvRow row;
        row.core = core;
        row.residual = energy_law_residual(core_rows);
        row.blowup = blowup_indicator(s);
        const ConcentrationMax cm = concentration_max(s, mon_radius, mon_stride);
        row.conc_max = cm.value;
        row.conc_x = cm.x1;
        row.conc_y = cm.x2;
        rows.push_back(row);
        for (auto& m : monitors) m.observe(s);
    };

    auto snapshot_observer = [&](const State& s, long idx) {
        char name[64];
        std::snprintf(name, sizeof(name), "/snap_%06ld", idx);
        write_snapshot(out_dir + name + "_v.el2", s.v, s.t);
        write_snapshot(out_dir + name + "_n.el2", s.n, s.t);
    };

    std::vector<Observer> observers;
    observers.push_back({cfg.output.ledger_stride, ledger_observer});
    if (cfg.output.snapshot_stride > 0)
        observers.push_back({cfg.output.snapshot_stride, snapshot_observer});

    const RunResult res = run(state, cfg.solver, coeffs, elastic, cfg.t_end, observers);

    if (cfg.output.snapshot_stride <= 0) {
        snapshot_observer(state, 0);
        if (res.steps > 0) snapshot_observer(res.final_state, res.steps);
    }

    write_ledger_csv(out_dir + "/ledger.csv", rows);

    for (std::size_t i = 0; i < monitors.size(); ++i) {
        const MonotonicityReport rep = monitors[i].report();
        art.sup_rho.push_back(rep.sup_rho);
        char name[64];
        std::snprintf(name, sizeof(name), "/monotonicity_%zu.csv", i);
        std::ofstream mout(out_dir + name);
        mout << "t,local_e,local_dvisc,local_drelax,lhs,bound,rho\n";
        char buf[256];
        const auto& series = monitors[i].series();
        for (std::size_t r = 0; r < rep.rows.size(); ++r) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                          rep.rows[r].t, series[r].local_e, series[r].local_dvisc,
                          series[r].local_drelax, rep.rows[r].lhs, rep.rows[r].bound,
                          rep.rows[r].rho);
            mout << buf;
        }
    }

    // time integral of the blow-up indicator over the observed rows
    if (rows.size() >= 2) {
        std::vector<double> t(rows.size()), y(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            t[i] = rows[i].core.t;
            y[i] = rows[i].blowup;
        }
        art.blowup_integral = cumulative_integral(t, y).back();
    }

    art.steps = res.steps;
    art.final_energy = rows.empty() ? 0.0 : rows.back().core.E;
    art.final_residual = rows.empty() ? 0.0 : rows.back().residual;
    art.max_unit_deviation = res.max_unit_deviation;
    art.max_divergence = res.max_divergence;
    art.ledger_rows = std::move(rows);

    std::ofstream sum(out_dir + "/summary.txt");
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "steps = %ld\nfinal_energy = %.17g\nenergy_law_residual = %.17g\n"
                  "blowup_integral = %.17g\nmax_unit_deviation = %.17g\n"
                  "max_divergence = %.17g\n",
                  art.steps, art.final_energy, art.final_residual, art.blowup_integral,
                  art.max_unit_deviation, art.max_divergence);
    sum << buf;
    for (std::size_t i = 0; i < art.sup_rho.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "sup_rho_%zu = %.17g\n", i, art.sup_rho[i]);
        sum << buf;
    }

    if (!quiet)
        std::cerr << "run finished: " << art.steps << " steps, residual " << art.final_residual
                  << ", output in " << out_dir << "\n";
    return art;
}

std::vector<IdentityCheck> verify_identities(std::uint64_t seed, int n_states, int grid_n,
                                             double length) {
    Grid grid(grid_n, length);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    double worst_h = 0.0, worst_id = 0.0, worst_power = 0.0;
    for (int s = 0; s < n_states; ++s) {
        const ElasticConstants k(0.5 + 1.5 * uni(rng), 0.5 + 1.5 * uni(rng),
                                 0.5 + 1.5 * uni(rng));
        // the angle harmonics must decay well inside the band, so the base
        // modes scale as N/16
        const int kmax = std::max(2, grid_n / 16);
        const Field n = random_director(grid, seed + 17 * s + 1, kmax, 0.5);
        const Field v = random_velocity(grid, seed + 17 * s + 2, 2 * kmax, 0.5);

        const ElasticState st = make_elastic_state(n);
        const Field h = molecular_field(st, k);
        Field hd = molecular_field_oracle(st, k);
        hd -= h;
        const double rel = l2_norm(hd) / std::max(1e-300, l2_norm(h));
        worst_h = std::max(worst_h, rel);

        const Field res = wp_dot_n_residual(st, k);
        double gradn_max = 0.0;
        for (std::size_t t = 0; t < grid.size(); ++t) {
            double acc = 0.0;
            for (int q = 0; q < 6; ++q) acc += st.grad.comp(q)[t] * st.grad.comp(q)[t];
            gradn_max = std::max(gradn_max, acc);
        }
        worst_id = std::max(worst_id, linf_comp(res, 0) / (1.0 + gradn_max));

        // Parodi-consistent random viscosities
        LeslieCoefficients al;
        al.alpha2 = -1.0 + 2.0 * uni(rng);
        al.alpha3 = al.alpha2 + 0.5 + 2.5 * uni(rng);
        al.alpha5 = -1.0 + 2.0 * uni(rng);
        al.alpha6 = al.alpha5 + al.alpha2 + al.alpha3;
        al.alpha1 = -1.0 + 2.0 * uni(rng);
        al.alpha4 = 0.5 + 1.5 * uni(rng);
        al.gamma = 0.3 + 0.4 * uni(rng);
        al.reynolds = 0.5 + 1.5 * uni(rng);
        const Coefficients c(al);

        const State state{v, n, 0.0};
        const Field n_t = director_rhs(state, c, k);
        const double resid = stress_power_residual(al, c.derived, v, n, n_t, k);
        const Field dv = spectral::gradient(v);
        const double scale = l2_norm(dv) * l2_norm(dv) + l2_norm(h) * l2_norm(h);
        worst_power = std::max(worst_power, resid / std::max(1e-300, scale));
    }

    std::vector<IdentityCheck> checks;
    checks.push_back({"molecular field: decomposition vs divergence form (rel L2)", worst_h,
                      1e-6, worst_h <= 1e-6});
    checks.push_back({"(div w_p).n pointwise identity (weighted Linf)", worst_id, 1e-6,
                      worst_id <= 1e-6});
    checks.push_back({"stress power identity (weighted residual)", worst_power, 1e-6,
                      worst_power <= 1e-6});
    return checks;
}

CertifyReport certify_ledger(const std::string& path) {
    const std::vector<LedgerCsvRow> rows = read_ledger_csv(path);
    if (rows.empty()) throw EmptySeries("ledger has no rows: " + path);
    CertifyReport rep;
    rep.rows = rows.size();
    std::vector<EnergyLedgerRow> core(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) core[i] = rows[i].core;
    rep.residual = energy_law_residual(core);
    rep.reported_residual = rows.back().residual;
    for (const auto& r : rows) {
        if (r.core.d_visc < -1e-15 * std::max(1.0, std::abs(r.core.d_visc)))
            ++rep.sign_violations;
        if (r.core.d_relax < -1e-15 * std::max(1.0, std::abs(r.core.d_relax)))
            ++rep.sign_violations;
        const double sum3 = r.core.d_beta1 + r.core.d_beta2 + r.core.d_beta3;
        const double scale =
            std::abs(r.core.d_beta1) + std::abs(r.core.d_beta2) + std::abs(r.core.d_beta3);
        if (sum3 < -tol::form * std::max(1.0, scale)) ++rep.sign_violations;
    }
    return rep;
}

} // namespace el2d
