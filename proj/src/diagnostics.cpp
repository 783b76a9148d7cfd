#include "el2d/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "el2d/leslie_stress.hpp"
#include "el2d/spectral.hpp"

namespace el2d {

PointwiseDensities pointwise_densities(const State& s, const Coefficients& c,
                                       const ElasticConstants& k) {
    const Grid& g = s.v.grid();
    const ElasticState st = make_elastic_state(s.n);
    const Field h = molecular_field(st, k);
    const Field w = density(st, k);
    const Field dv = spectral::gradient(s.v);  // comp(a*2+i) = d_{a+1} v^i

    PointwiseDensities pd{Field(g, 1), Field(g, 1), Field(g, 1), Field(g, 1),
                          Field(g, 1), Field(g, 1), Field(g, 1)};
    const double vw = c.alphas.reynolds / (2.0 * (1.0 - c.alphas.gamma));
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t) {
        const double nl[3] = {s.n.comp(0)[t], s.n.comp(1)[t], s.n.comp(2)[t]};
        const double hl[3] = {h.comp(0)[t], h.comp(1)[t], h.comp(2)[t]};
        const double vx = s.v.comp(0)[t], vy = s.v.comp(1)[t];
        double grad[2][2];
        for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i) grad[a][i] = dv.comp(a * 2 + i)[t];
        double gradv2 = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i) gradv2 += grad[a][i] * grad[a][i];
        double D[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) D[i][j] = 0.5 * (grad[i][j] + grad[j][i]);
        const double Dn[2] = {D[0][0] * nl[0] + D[0][1] * nl[1],
                              D[1][0] * nl[0] + D[1][1] * nl[1]};
        const double nDn = nl[0] * Dn[0] + nl[1] * Dn[1];
        double DDv = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) DDv += D[i][j] * D[i][j];
        const double nxh[3] = {nl[1] * hl[2] - nl[2] * hl[1], nl[2] * hl[0] - nl[0] * hl[2],
                               nl[0] * hl[1] - nl[1] * hl[0]};
        double gradn2 = 0.0;
        for (int q = 0; q < 6; ++q) {
            const double v = st.grad.comp(q)[t];
            gradn2 += v * v;
        }
        pd.e.comp(0)[t] = w.comp(0)[t] + vw * (vx * vx + vy * vy);
        pd.gradv2.comp(0)[t] = gradv2;
        pd.nxh2.comp(0)[t] = nxh[0] * nxh[0] + nxh[1] * nxh[1] + nxh[2] * nxh[2];
        pd.nnD2.comp(0)[t] = nDn * nDn;
        pd.DD.comp(0)[t] = DDv;
        pd.Dn2.comp(0)[t] = Dn[0] * Dn[0] + Dn[1] * Dn[1];
        pd.conc.comp(0)[t] = vx * vx + vy * vy + gradn2;
    }
    return pd;
}

double energy(const State& s, const Coefficients& c, const ElasticConstants& k) {
    return integral(pointwise_densities(s, c, k).e);
}

EnergyLedgerRow ledger(const State& s, const Coefficients& c, const ElasticConstants& k) {
    const PointwiseDensities pd = pointwise_densities(s, c, k);
    const double gamma = c.alphas.gamma;
    EnergyLedgerRow row;
    row.t = s.t;
    row.E = integral(pd.e);
    row.d_visc = gamma / (1.0 - gamma) * integral(pd.gradv2);
    row.d_relax = c.derived.mu1 * integral(pd.nxh2);
    row.d_beta1 = c.derived.beta1 * integral(pd.nnD2);
    row.d_beta2 = c.derived.beta2 * integral(pd.DD);
    row.d_beta3 = c.derived.beta3 * integral(pd.Dn2);
    return row;
}

std::vector<double> cumulative_integral(std::span<const double> t, std::span<const double> y) {
    const std::size_t n = t.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    if (n == 2) {
        out[1] = 0.5 * (t[1] - t[0]) * (y[0] + y[1]);
        return out;
    }
    if (n == 3) {
        out[1] = 0.5 * (t[1] - t[0]) * (y[0] + y[1]);
        out[2] = (t[2] - t[0]) / 6.0 * (y[0] + 4.0 * y[1] + y[2]);
        return out;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = t[i + 1] - t[i];
        double inc;
        if (i == 0)
            inc = h * (9.0 * y[0] + 19.0 * y[1] - 5.0 * y[2] + y[3]) / 24.0;
        else if (i + 2 < n)
            inc = h * (-y[i - 1] + 13.0 * y[i] + 13.0 * y[i + 1] - y[i + 2]) / 24.0;
        else
            inc = h * (y[n - 4] - 5.0 * y[n - 3] + 19.0 * y[n - 2] + 9.0 * y[n - 1]) / 24.0;
        out[i + 1] = out[i] + inc;
    }
    return out;
}

double energy_law_residual(std::span<const EnergyLedgerRow> rows) {
    if (rows.empty()) throw EmptySeries("energy_law_residual: empty ledger series");
    std::vector<double> t(rows.size()), d(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t[i] = rows[i].t;
        d[i] = rows[i].d_visc + rows[i].d_relax + rows[i].d_beta1 + rows[i].d_beta2 +
               rows[i].d_beta3;
    }
    const std::vector<double> acc = cumulative_integral(t, d);
    const double e0 = rows[0].E;
    double worst = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        worst = std::max(worst, std::abs(rows[i].E + acc[i] - e0));
    return e0 > 0.0 ? worst / e0 : worst;
}

HigherEnergyReport higher_energy(const State& s, const Coefficients& c,
                                 const ElasticConstants& k, int order, const Field& n0) {
    if (order < 1) throw BadParams("higher_energy: order must be >= 1");
    const Grid& g = s.v.grid();
    HigherEnergyReport rep;

    Field diff_n = s.n;
    diff_n -= n0;
    rep.n_diff = l2_norm(diff_n);
    rep.n_diff *= rep.n_diff;

    const double vw = c.alphas.reynolds / (2.0 * (1.0 - c.alphas.gamma));
    const double vn = l2_norm(s.v);
    rep.v_l2 = vw * vn * vn;

    const ElasticState st = make_elastic_state(s.n);
    rep.elastic = integral(density(st, k));

    // lap^s as a spectral multiplier
    auto powlap = [&](const SpectralField& in) {
        SpectralField out = in;
        const int cols = g.spec_cols();
        for (int cc = 0; cc < out.comps(); ++cc)
            for (int i = 0; i < g.n(); ++i) {
                const double k1 = g.k1_deriv(i);
                for (int j = 0; j < cols; ++j) {
                    const double k2 = g.k2_deriv(j);
                    out.comp(cc)[std::size_t(i) * cols + j] *=
                        std::pow(-(k1 * k1 + k2 * k2), order);
                }
            }
        return out;
    };

    const SpectralField n_hat = spectral::analyze(s.n);
    const SpectralField nls = powlap(n_hat);
    const Field nl_field = spectral::synthesize(nls);

    const Field grad_nl = spectral::gradient(nl_field);
    const double gn = l2_norm(grad_nl);
    rep.hs_grad = k.a * gn * gn;

    const Field div_nl = spectral::divergence2(nl_field);
    const double dn = l2_norm(div_nl);
    rep.hs_div = (k.k1 - k.a) * dn * dn;

    const Field curl_nl = spectral::curl3(nl_field);
    double cross_sum = 0.0, dot_sum = 0.0;
    for (std::size_t t = 0; t < g.size(); ++t) {
        const double nl[3] = {s.n.comp(0)[t], s.n.comp(1)[t], s.n.comp(2)[t]};
        const double cl[3] = {curl_nl.comp(0)[t], curl_nl.comp(1)[t], curl_nl.comp(2)[t]};
        const double cx[3] = {nl[1] * cl[2] - nl[2] * cl[1], nl[2] * cl[0] - nl[0] * cl[2],
                              nl[0] * cl[1] - nl[1] * cl[0]};
        cross_sum += cx[0] * cx[0] + cx[1] * cx[1] + cx[2] * cx[2];
        const double dt = nl[0] * cl[0] + nl[1] * cl[1] + nl[2] * cl[2];
        dot_sum += dt * dt;
    }
    rep.hs_curl_cross = (k.k2 - k.a) * cross_sum * g.cell_area();
    rep.hs_curl_dot = (k.k3 - k.a) * dot_sum * g.cell_area();

    const Field v_hi = spectral::synthesize(powlap(spectral::analyze(s.v)));
    const double vh = l2_norm(v_hi);
    rep.v_high = vw * vh * vh;

    rep.total = rep.n_diff + rep.v_l2 + rep.elastic + rep.hs_grad + rep.hs_div +
                rep.hs_curl_cross + rep.hs_curl_dot + rep.v_high;
    return rep;
}

double local_energy(const State& s, const Coefficients& c, const ElasticConstants& k,
                    double x0, double y0, double R) {
    const PointwiseDensities pd = pointwise_densities(s, c, k);
    return spectral::ball_integral(pd.e, 0, x0, y0, R);
}

double local_concentration(const State& s, double x0, double y0, double R) {
    const Grid& g = s.v.grid();
    const Field dn = spectral::gradient(s.n);
    Field q(g, 1);
    for (std::size_t t = 0; t < g.size(); ++t) {
        double acc = s.v.comp(0)[t] * s.v.comp(0)[t] + s.v.comp(1)[t] * s.v.comp(1)[t];
        for (int cc = 0; cc < 6; ++cc) acc += dn.comp(cc)[t] * dn.comp(cc)[t];
        q.comp(0)[t] = acc;
    }
    return spectral::ball_integral(q, 0, x0, y0, R);
}

ConcentrationMax concentration_max(const State& s, double R, int stride) {
    if (stride < 1) throw BadParams("concentration_max: stride must be >= 1");
    const Grid& g = s.v.grid();
    const Field dn = spectral::gradient(s.n);
    Field q(g, 1);
    for (std::size_t t = 0; t < g.size(); ++t) {
        double acc = s.v.comp(0)[t] * s.v.comp(0)[t] + s.v.comp(1)[t] * s.v.comp(1)[t];
        for (int cc = 0; cc < 6; ++cc) acc += dn.comp(cc)[t] * dn.comp(cc)[t];
        q.comp(0)[t] = acc;
    }
    const Field sums = spectral::ball_integral_all(q, 0, R);
    ConcentrationMax best;
    bool first = true;
    for (int i = 0; i < g.n(); i += stride)
        for (int j = 0; j < g.n(); j += stride) {
            const double v = sums.at(0, i, j);
            if (first || v > best.value) {
                best = {g.x1(i), g.x2(j), v};
                first = false;
            }
        }
    return best;
}

double blowup_indicator(const State& s) {
    const Grid& g = s.v.grid();
    const Field dv = spectral::gradient(s.v);
    const Field dn = spectral::gradient(s.n);
    double curl_max = 0.0, gradn_max = 0.0;
    for (std::size_t t = 0; t < g.size(); ++t) {
        // scalar curl = d1 v^2 - d2 v^1
        curl_max = std::max(curl_max, std::abs(dv.comp(0 * 2 + 1)[t] - dv.comp(1 * 2 + 0)[t]));
        double acc = 0.0;
        for (int cc = 0; cc < 6; ++cc) acc += dn.comp(cc)[t] * dn.comp(cc)[t];
        gradn_max = std::max(gradn_max, acc);
    }
    return curl_max + gradn_max;
}

MonotonicityReport monotonicity_report(std::span<const LocalSeriesRow> series,
                                       double initial_2r_energy, double total_initial_energy,
                                       double R) {
    if (series.empty()) throw EmptySeries("monotonicity_report: empty series");
    const double t0 = series.front().t;
    std::vector<double> t(series.size()), dv(series.size()), dr(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        t[i] = series[i].t;
        dv[i] = series[i].local_dvisc;
        dr[i] = series[i].local_drelax;
    }
    const std::vector<double> acc_v = cumulative_integral(t, dv);
    const std::vector<double> acc_r = cumulative_integral(t, dr);

    MonotonicityReport rep;
    rep.initial_2r_energy = initial_2r_energy;
    rep.total_initial_energy = total_initial_energy;
    rep.rows.resize(series.size());
    bool have_sup = false;
    for (std::size_t i = 0; i < series.size(); ++i) {
        MonotonicityRow& r = rep.rows[i];
        r.t = series[i].t;
        r.lhs = series[i].local_e + acc_v[i] + acc_r[i];
        const double el = r.t - t0;
        r.bound = el > 0.0
                      ? std::sqrt(el) / R * std::sqrt(1.0 + el / (R * R)) * total_initial_energy
                      : 0.0;
        r.rho = (r.bound > 0.0) ? (r.lhs - initial_2r_energy) / r.bound : 0.0;
        if (i > 0) {
            rep.sup_rho = have_sup ? std::max(rep.sup_rho, r.rho) : r.rho;
            have_sup = true;
        }
    }
    return rep;
}

LocalMonitor::LocalMonitor(const State& initial, const Coefficients& c,
                           const ElasticConstants& k, double x0, double y0, double R)
    : c_(c), k_(k), x0_(x0), y0_(y0), R_(R) {
    const double L = initial.v.grid().length();
    if (!(R > 0.0)) throw BadParams("local monitor: R must be positive");
    if (R > L / 4.0) throw RadiusTooLarge("local monitor: R must be <= L/4 so B_{2R} fits");
    const PointwiseDensities pd = pointwise_densities(initial, c, k);
    initial_2r_energy_ = spectral::ball_integral(pd.e, 0, x0, y0, 2.0 * R);
    total_initial_energy_ = integral(pd.e);
    observe(initial);
}

void LocalMonitor::observe(const State& s) {
    if (!series_.empty() && s.t <= series_.back().t) return;
    const PointwiseDensities pd = pointwise_densities(s, c_, k_);
    LocalSeriesRow row;
    row.t = s.t;
    row.local_e = spectral::ball_integral(pd.e, 0, x0_, y0_, R_);
    const double gamma = c_.alphas.gamma;
    row.local_dvisc = gamma / (1.0 - gamma) * spectral::ball_integral(pd.gradv2, 0, x0_, y0_, R_);
    row.local_drelax = 0.5 * c_.derived.mu1 * spectral::ball_integral(pd.nxh2, 0, x0_, y0_, R_);
    series_.push_back(row);
}

MonotonicityReport LocalMonitor::report() const {
    return monotonicity_report(series_, initial_2r_energy_, total_initial_energy_, R_);
}

void write_ledger_csv(const std::string& path, std::span<const LedgerCsvRow> rows) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open ledger for writing: " + path);
    out << "t,E,d_visc,d_relax,d_beta1,d_beta2,d_beta3,residual,blowup,conc_max,conc_x,conc_y\n";
    char buf[512];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.core.t, r.core.E, r.core.d_visc, r.core.d_relax, r.core.d_beta1,
                      r.core.d_beta2, r.core.d_beta3, r.residual, r.blowup, r.conc_max,
                      r.conc_x, r.conc_y);
        out << buf;
    }
    if (!out) throw Error("ledger write failed: " + path);
}

std::vector<LedgerCsvRow> read_ledger_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ledger: " + path);
    std::string line;
    if (!std::getline(in, line)) throw EmptySeries("ledger file has no header: " + path);
    std::vector<LedgerCsvRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        double vals[12];
        char comma;
        for (int i = 0; i < 12; ++i) {
            if (!(ls >> vals[i])) throw ParseError("bad ledger row: " + path, line_no);
            if (i < 11 && !(ls >> comma)) throw ParseError("bad ledger row: " + path, line_no);
        }
        LedgerCsvRow r;
        r.core = {vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6]};
        r.residual = vals[7];
        r.blowup = vals[8];
        r.conc_max = vals[9];
        r.conc_x = vals[10];
        r.conc_y = vals[11];
        rows.push_back(r);
    }
    return rows;
}

} // namespace el2d
