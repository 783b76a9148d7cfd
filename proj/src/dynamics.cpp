#include "el2d/dynamics.hpp"

#include <cmath>

#include "el2d/detail/levi_civita.hpp"
#include "el2d/leslie_stress.hpp"
#include "el2d/spectral.hpp"

namespace el2d {

using detail::eps_contract;

namespace {

constexpr std::complex<double> I{0.0, 1.0};

thread_local double g_last_unit_drift = 0.0;

struct PlainEval {
    Field n_rhs;           // director equation right-hand side
    Field sig;             // 4 comps (i*2+j): (sigma^L + sigma^E)_{ij}, empty unless requested
    Field adv_v;           // v . grad v, empty unless requested
    SpectralField v_hat;
};

// Core evaluation shared by director_rhs, velocity_rhs, pressure and the
// steppers. Pointwise products on the grid, derivatives spectral.
PlainEval eval_core(const Field& v, const Field& n, const Coefficients& c,
                    const ElasticConstants& k, bool need_stress) {
    const Grid& g = v.grid();
    const ElasticState st = make_elastic_state(n);
    const Field h = molecular_field(st, k);

    PlainEval ev;
    ev.v_hat = spectral::analyze(v);
    Field dv(g, 4);  // comp(a*2 + i) = d_{a+1} v^i
    {
        const SpectralField d1 = spectral::diff(ev.v_hat, 1);
        const SpectralField d2 = spectral::diff(ev.v_hat, 2);
        for (int i = 0; i < 2; ++i) {
            g.inverse(d1.comp_span(i), dv.comp(i));
            g.inverse(d2.comp_span(i), dv.comp(2 + i));
        }
    }

    ev.n_rhs = Field(g, 3);
    if (need_stress) {
        ev.sig = Field(g, 4);
        ev.adv_v = Field(g, 2);
    }
    const double mu1 = c.derived.mu1, mu2 = c.derived.mu2;
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t) {
        double grad[2][2];
        for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i) grad[a][i] = dv.comp(a * 2 + i)[t];
        double D[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) D[i][j] = 0.5 * (grad[i][j] + grad[j][i]);
        const double om01 = 0.5 * (grad[0][1] - grad[1][0]);  // Omega_{01}

        const double nl[3] = {n.comp(0)[t], n.comp(1)[t], n.comp(2)[t]};
        const double hl[3] = {h.comp(0)[t], h.comp(1)[t], h.comp(2)[t]};
        const double vx = v.comp(0)[t], vy = v.comp(1)[t];

        double Dn[3] = {D[0][0] * nl[0] + D[0][1] * nl[1], D[1][0] * nl[0] + D[1][1] * nl[1],
                        0.0};
        const double om_n[3] = {om01 * nl[1], -om01 * nl[0], 0.0};

        double G[3], adv_n[3];
        for (int l = 0; l < 3; ++l) {
            G[l] = om_n[l] - mu1 * hl[l] - mu2 * Dn[l];
            adv_n[l] = vx * st.grad.comp(l)[t] + vy * st.grad.comp(3 + l)[t];
        }
        const double nn = nl[0] * nl[0] + nl[1] * nl[1] + nl[2] * nl[2];
        const double nG = nl[0] * G[0] + nl[1] * G[1] + nl[2] * G[2];
        double Nrot[3];  // N = Omega.n - n x (G x n)
        for (int l = 0; l < 3; ++l) {
            const double cross = G[l] * nn - nG * nl[l];  // n x (G x n)
            ev.n_rhs.comp(l)[t] = -adv_n[l] - cross;
            Nrot[l] = om_n[l] - cross;
        }

        if (!need_stress) continue;

        const double nDn = nl[0] * Dn[0] + nl[1] * Dn[1];
        const double cl[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double ndc = nl[0] * cl[0] + nl[1] * cl[1] + nl[2] * cl[2];
        const double dvn = st.divn.comp(0)[t];
        const auto& al = c.alphas;
        for (int i = 0; i < 2; ++i) {
            double wp_row[3];
            for (int l = 0; l < 3; ++l) {
                double w = 2.0 * k.a * st.grad.comp(i * 3 + l)[t];
                if (i == l) w += 2.0 * (k.k1 - k.a) * dvn;
                w += 2.0 * (k.k2 - k.a) * eps_contract(cl, i, l);
                w += 2.0 * (k.k3 - k.k2) * ndc * eps_contract(nl, i, l);
                wp_row[l] = w;
            }
            for (int j = 0; j < 2; ++j) {
                double sE = 0.0;
                for (int l = 0; l < 3; ++l) sE -= wp_row[l] * st.grad.comp(j * 3 + l)[t];
                const double sL = al.alpha1 * nDn * nl[i] * nl[j] + al.alpha2 * nl[i] * Nrot[j] +
                                  al.alpha3 * Nrot[i] * nl[j] + al.alpha4 * D[i][j] +
                                  al.alpha5 * nl[i] * Dn[j] + al.alpha6 * Dn[i] * nl[j];
                ev.sig.comp(i * 2 + j)[t] = sL + sE;
            }
        }
        for (int j = 0; j < 2; ++j) ev.adv_v.comp(j)[t] = vx * grad[0][j] + vy * grad[1][j];
    }
    return ev;
}

// Spectral force assembly: project[-adv + nu lap v + csig div sigma].
Field assemble_velocity_rhs(const PlainEval& ev, const Coefficients& c, bool dealias) {
    const Grid& g = ev.v_hat.grid();
    const double nu = c.alphas.gamma / c.alphas.reynolds;
    const double csig = (1.0 - c.alphas.gamma) / c.alphas.reynolds;
    const SpectralField adv_hat = spectral::analyze(ev.adv_v);
    const SpectralField sig_hat = spectral::analyze(ev.sig);
    SpectralField f(g, 2);
    const int cols = g.spec_cols();
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.k1_deriv(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.k2_deriv(j);
            const double kk = k1 * k1 + k2 * k2;
            const std::size_t idx = std::size_t(i) * cols + j;
            for (int jj = 0; jj < 2; ++jj) {
                // (div sigma)_j = d_i sigma_{ij}
                const std::complex<double> divs =
                    I * (k1 * sig_hat.comp(0 * 2 + jj)[idx] + k2 * sig_hat.comp(1 * 2 + jj)[idx]);
                f.comp(jj)[idx] =
                    -adv_hat.comp(jj)[idx] - nu * kk * ev.v_hat.comp(jj)[idx] + csig * divs;
            }
        }
    }
    spectral::leray_inplace(f);
    if (dealias) spectral::dealias_inplace(f);
    return spectral::synthesize(f);
}

Field dealias_field(const Field& f) {
    SpectralField s = spectral::analyze(f);
    spectral::dealias_inplace(s);
    return spectral::synthesize(s);
}

struct RhsPair {
    Field v_rhs;
    Field n_rhs;
};

RhsPair eval_plain_pair(const Field& v, const Field& n, const Coefficients& c,
                        const ElasticConstants& k, bool dealias) {
    PlainEval ev = eval_core(v, n, c, k, true);
    RhsPair out;
    out.v_rhs = assemble_velocity_rhs(ev, c, dealias);
    out.n_rhs = dealias ? dealias_field(ev.n_rhs) : std::move(ev.n_rhs);
    return out;
}

// Right-hand side of the regularised system: every nonlinear product is
// wrapped in the low-pass J, stresses are sigma_1 + sigma_2 + sigma^E of the
// mollified arguments, and the director equation uses the unit-length-free
// molecular field.
RhsPair eval_mollified_pair(const Field& v, const Field& n, const Coefficients& c,
                            const ElasticConstants& k, int K) {
    const Grid& g = v.grid();
    SpectralField v_hat = spectral::analyze(v);
    spectral::mollify_inplace(v_hat, K);
    const Field Jv = spectral::synthesize(v_hat);
    const Field Jn = spectral::mollify(n, K);

    const ElasticState st = make_elastic_state(Jn);
    const Field h = molecular_field_general(st, k);

    Field dv(g, 4);
    {
        const SpectralField d1 = spectral::diff(v_hat, 1);
        const SpectralField d2 = spectral::diff(v_hat, 2);
        for (int i = 0; i < 2; ++i) {
            g.inverse(d1.comp_span(i), dv.comp(i));
            g.inverse(d2.comp_span(i), dv.comp(2 + i));
        }
    }

    Field Dfield(g, 9);
    Field inner(g, 3);  // Jv.grad Jn + Jn x ((Omega.Jn - mu1 h - mu2 D.Jn) x Jn)
    Field adv_v(g, 2);
    const double mu1 = c.derived.mu1, mu2 = c.derived.mu2;
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t) {
        double grad[2][2];
        for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i) grad[a][i] = dv.comp(a * 2 + i)[t];
        double D[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                D[i][j] = 0.5 * (grad[i][j] + grad[j][i]);
                Dfield.comp(i * 3 + j)[t] = D[i][j];
            }
        const double om01 = 0.5 * (grad[0][1] - grad[1][0]);
        const double nl[3] = {Jn.comp(0)[t], Jn.comp(1)[t], Jn.comp(2)[t]};
        const double hl[3] = {h.comp(0)[t], h.comp(1)[t], h.comp(2)[t]};
        const double vx = Jv.comp(0)[t], vy = Jv.comp(1)[t];
        const double Dn[3] = {D[0][0] * nl[0] + D[0][1] * nl[1],
                              D[1][0] * nl[0] + D[1][1] * nl[1], 0.0};
        const double om_n[3] = {om01 * nl[1], -om01 * nl[0], 0.0};
        const double nn = nl[0] * nl[0] + nl[1] * nl[1] + nl[2] * nl[2];
        double G[3];
        for (int l = 0; l < 3; ++l) G[l] = om_n[l] - mu1 * hl[l] - mu2 * Dn[l];
        const double nG = nl[0] * G[0] + nl[1] * G[1] + nl[2] * G[2];
        for (int l = 0; l < 3; ++l) {
            const double adv = vx * st.grad.comp(l)[t] + vy * st.grad.comp(3 + l)[t];
            inner.comp(l)[t] = adv + (G[l] * nn - nG * nl[l]);
        }
        for (int j = 0; j < 2; ++j) adv_v.comp(j)[t] = vx * grad[0][j] + vy * grad[1][j];
    }

    RhsPair out;
    {
        SpectralField s = spectral::analyze(inner);
        spectral::mollify_inplace(s, K);
        out.n_rhs = spectral::synthesize(s);
        out.n_rhs *= -1.0;
    }

    const Field s12 = regularized_stress(c.derived, Jn, Dfield, h);
    const Field sE = ericksen_stress(st, k);
    Field sig(g, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (std::size_t t = 0; t < m; ++t)
                sig.comp(i * 2 + j)[t] = s12.comp(i * 3 + j)[t] + sE.comp(i * 3 + j)[t];

    const double nu = c.alphas.gamma / c.alphas.reynolds;
    const double csig = (1.0 - c.alphas.gamma) / c.alphas.reynolds;
    SpectralField adv_hat = spectral::analyze(adv_v);
    spectral::leray_inplace(adv_hat);
    spectral::mollify_inplace(adv_hat, K);
    SpectralField sig_hat = spectral::analyze(sig);
    SpectralField force(g, 2);
    const int cols = g.spec_cols();
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.k1_deriv(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.k2_deriv(j);
            const double kk = k1 * k1 + k2 * k2;
            const std::size_t idx = std::size_t(i) * cols + j;
            for (int jj = 0; jj < 2; ++jj) {
                const std::complex<double> divs =
                    I * (k1 * sig_hat.comp(0 * 2 + jj)[idx] + k2 * sig_hat.comp(1 * 2 + jj)[idx]);
                force.comp(jj)[idx] = csig * divs - nu * kk * v_hat.comp(jj)[idx];
            }
        }
    }
    spectral::leray_inplace(force);
    spectral::mollify_inplace(force, K);
    // the viscous term carries J lap J v: one factor came with v_hat, the
    // outer one is part of the mollified projection above; the advection
    // term was already projected and mollified separately
    for (int jj = 0; jj < 2; ++jj)
        for (std::size_t t = 0; t < force.plane_size(); ++t)
            force.comp(jj)[t] -= adv_hat.comp(jj)[t];
    out.v_rhs = spectral::synthesize(force);
    return out;
}

RhsPair eval_rhs(const Field& v, const Field& n, const SolverConfig& cfg, const Coefficients& c,
                 const ElasticConstants& k) {
    if (cfg.mollify_cutoff) return eval_mollified_pair(v, n, c, k, *cfg.mollify_cutoff);
    return eval_plain_pair(v, n, c, k, cfg.dealias);
}

void apply_exp_multiplier(Field& f, double rate_dt) {
    // multiplies each mode by exp(-rate_dt |k|^2)
    const Grid& g = f.grid();
    SpectralField s = spectral::analyze(f);
    const int cols = g.spec_cols();
    for (int c = 0; c < s.comps(); ++c)
        for (int i = 0; i < g.n(); ++i) {
            const double k1 = g.k1_deriv(i);
            for (int j = 0; j < cols; ++j) {
                const double k2 = g.k2_deriv(j);
                s.comp(c)[std::size_t(i) * cols + j] *= std::exp(-rate_dt * (k1 * k1 + k2 * k2));
            }
        }
    f = spectral::synthesize(s);
}

struct Pair {
    Field v, n;
};

Pair axpy_pair(const Pair& y, double s, const RhsPair& k) {
    Pair out = y;
    out.v.axpy(s, k.v_rhs);
    out.n.axpy(s, k.n_rhs);
    return out;
}

Pair rk4_combine(const Field& v, const Field& n, const SolverConfig& cfg,
                 const Coefficients& c, const ElasticConstants& k, double dt) {
    SolverConfig scfg = cfg;
    scfg.dt = dt;
    const Pair y{v, n};
    const RhsPair k1 = eval_rhs(y.v, y.n, scfg, c, k);
    const Pair y2 = axpy_pair(y, 0.5 * dt, k1);
    const RhsPair k2 = eval_rhs(y2.v, y2.n, scfg, c, k);
    const Pair y3 = axpy_pair(y, 0.5 * dt, k2);
    const RhsPair k3 = eval_rhs(y3.v, y3.n, scfg, c, k);
    const Pair y4 = axpy_pair(y, dt, k3);
    const RhsPair k4 = eval_rhs(y4.v, y4.n, scfg, c, k);

    Pair out{v, n};
    const double w = dt / 6.0;
    out.v.axpy(w, k1.v_rhs);
    out.v.axpy(2.0 * w, k2.v_rhs);
    out.v.axpy(2.0 * w, k3.v_rhs);
    out.v.axpy(w, k4.v_rhs);
    out.n.axpy(w, k1.n_rhs);
    out.n.axpy(2.0 * w, k2.n_rhs);
    out.n.axpy(2.0 * w, k3.n_rhs);
    out.n.axpy(w, k4.n_rhs);
    return out;
}

// Integrating-factor RK4: the two stiff Laplacians (viscosity on v, the
// leading 2 a mu1 lap n of the molecular field) are integrated exactly in
// Fourier space; everything else stays explicit.
Pair ifrk4_combine(const Field& v, const Field& n, const SolverConfig& cfg,
                   const Coefficients& c, const ElasticConstants& k, double dt) {
    const double nu_v = c.alphas.gamma / c.alphas.reynolds;
    const double nu_n = 2.0 * k.a * c.derived.mu1;

    auto nonlinear = [&](const Field& vv, const Field& nn) {
        RhsPair r = eval_rhs(vv, nn, cfg, c, k);
        const Field lap_v = spectral::synthesize(spectral::laplacian(spectral::analyze(vv)));
        const Field lap_n = spectral::synthesize(spectral::laplacian(spectral::analyze(nn)));
        r.v_rhs.axpy(-nu_v, lap_v);
        r.n_rhs.axpy(-nu_n, lap_n);
        return r;
    };
    auto apply_e = [&](Pair p, double factor_dt) {
        apply_exp_multiplier(p.v, nu_v * factor_dt);
        apply_exp_multiplier(p.n, nu_n * factor_dt);
        return p;
    };

    const Pair y{v, n};
    const RhsPair a = nonlinear(y.v, y.n);
    const Pair ya = apply_e(axpy_pair(y, 0.5 * dt, a), 0.5 * dt);
    const RhsPair b = nonlinear(ya.v, ya.n);
    Pair yb = apply_e(y, 0.5 * dt);
    yb.v.axpy(0.5 * dt, b.v_rhs);
    yb.n.axpy(0.5 * dt, b.n_rhs);
    const RhsPair cc = nonlinear(yb.v, yb.n);
    Pair yc = apply_e(y, dt);
    {
        Pair ec = apply_e(Pair{cc.v_rhs, cc.n_rhs}, 0.5 * dt);
        yc.v.axpy(dt, ec.v);
        yc.n.axpy(dt, ec.n);
    }
    const RhsPair d = nonlinear(yc.v, yc.n);

    Pair out = apply_e(y, dt);
    Pair ea = apply_e(Pair{a.v_rhs, a.n_rhs}, dt);
    Pair ebc{b.v_rhs, b.n_rhs};
    ebc.v += cc.v_rhs;
    ebc.n += cc.n_rhs;
    ebc = apply_e(std::move(ebc), 0.5 * dt);
    const double w = dt / 6.0;
    out.v.axpy(w, ea.v);
    out.n.axpy(w, ea.n);
    out.v.axpy(2.0 * w, ebc.v);
    out.n.axpy(2.0 * w, ebc.n);
    out.v.axpy(w, d.v_rhs);
    out.n.axpy(w, d.n_rhs);
    return out;
}

} // namespace

State make_state(Field v, Field n, double t, bool project, bool normalize) {
    if (v.comps() != 2 || n.comps() != 3) throw BadParams("state: expected v(2), n(3)");
    if (!v.all_finite() || !n.all_finite()) throw NonFinite("state: non-finite input", t);
    if (project) v = spectral::leray_project(std::move(v));
    if (normalize) n = normalized(n);
    State s{std::move(v), std::move(n), t};
    const Field div = spectral::divergence2(s.v);
    if (linf_comp(div, 0) > tol::divergence)
        throw ValidationError("state: velocity is not divergence-free");
    double dev = 0.0;
    for (std::size_t i = 0; i < s.n.plane_size(); ++i) {
        const double nx = s.n.comp(0)[i], ny = s.n.comp(1)[i], nz = s.n.comp(2)[i];
        dev = std::max(dev, std::abs(std::sqrt(nx * nx + ny * ny + nz * nz) - 1.0));
    }
    if (dev > tol::unit) throw ValidationError("state: director is not unit length");
    return s;
}

Field director_rhs(const State& s, const Coefficients& c, const ElasticConstants& k) {
    return eval_core(s.v, s.n, c, k, false).n_rhs;
}

Field velocity_rhs(const State& s, const Coefficients& c, const ElasticConstants& k) {
    return assemble_velocity_rhs(eval_core(s.v, s.n, c, k, true), c, false);
}

Field pressure_field(const State& s, const Coefficients& c, const ElasticConstants& k) {
    const Grid& g = s.v.grid();
    const PlainEval ev = eval_core(s.v, s.n, c, k, true);
    const double csig = (1.0 - c.alphas.gamma) / c.alphas.reynolds;
    Field T(g, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (std::size_t t = 0; t < g.size(); ++t)
                T.comp(i * 2 + j)[t] = csig * ev.sig.comp(i * 2 + j)[t] -
                                       s.v.comp(i)[t] * s.v.comp(j)[t];
    const SpectralField T_hat = spectral::analyze(T);
    SpectralField p_hat(g, 1);
    const int cols = g.spec_cols();
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.k1_deriv(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.k2_deriv(j);
            const double kk = k1 * k1 + k2 * k2;
            const std::size_t idx = std::size_t(i) * cols + j;
            if (kk == 0.0) {
                p_hat.comp(0)[idx] = 0.0;
                continue;
            }
            const double kv[2] = {k1, k2};
            std::complex<double> acc{0.0, 0.0};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) acc += kv[a] * kv[b] * T_hat.comp(a * 2 + b)[idx];
            p_hat.comp(0)[idx] = acc / kk;
        }
    }
    return spectral::synthesize(p_hat);
}

State step(const State& s, const SolverConfig& cfg, const Coefficients& c,
           const ElasticConstants& k) {
    if (!(cfg.dt > 0.0)) throw BadParams("step: dt must be positive");
    if (cfg.mollify_cutoff && cfg.scheme == Scheme::imex)
        throw ValidationError("imex scheme is not available in mollified mode");

    Pair next = (cfg.scheme == Scheme::rk4 || cfg.mollify_cutoff)
                    ? rk4_combine(s.v, s.n, cfg, c, k, cfg.dt)
                    : ifrk4_combine(s.v, s.n, cfg, c, k, cfg.dt);

    const double t_new = s.t + cfg.dt;
    if (!next.v.all_finite() || !next.n.all_finite())
        throw NonFinite("step produced a non-finite field", t_new);

    double drift = 0.0;
    for (std::size_t i = 0; i < next.n.plane_size(); ++i) {
        const double nx = next.n.comp(0)[i], ny = next.n.comp(1)[i], nz = next.n.comp(2)[i];
        drift = std::max(drift, std::abs(std::sqrt(nx * nx + ny * ny + nz * nz) - 1.0));
    }
    g_last_unit_drift = drift;
    // the regularised system does not constrain |n|, so the drift guard only
    // applies to plain stepping
    if (!cfg.mollify_cutoff && drift > 0.1)
        throw UnitDrift("director norm drifted by more than 0.1 in one step (dt too large?)",
                        t_new);
    if (cfg.renormalize) next.n = normalized(next.n);

    // the stage combination is already solenoidal mode-by-mode; the final
    // projection removes rounding residue only
    next.v = spectral::leray_project(next.v);
    return State{std::move(next.v), std::move(next.n), t_new};
}

double last_step_unit_drift() { return g_last_unit_drift; }

RunResult run(const State& initial, const SolverConfig& cfg, const Coefficients& c,
              const ElasticConstants& k, double t_end, const std::vector<Observer>& observers) {
    if (t_end < initial.t) throw BadParams("run: t_end must not precede the initial time");

    State state = initial;
    if (cfg.mollify_cutoff) {
        state.v = spectral::mollify(state.v, *cfg.mollify_cutoff);
        state.n = spectral::mollify(state.n, *cfg.mollify_cutoff);
    }

    auto notify = [&](const State& st, long idx) {
        for (const auto& ob : observers)
            if (ob.fn && (idx == 0 || ob.stride <= 1 || idx % ob.stride == 0)) ob.fn(st, idx);
    };
    auto notify_all = [&](const State& st, long idx) {
        for (const auto& ob : observers)
            if (ob.fn) ob.fn(st, idx);
    };

    RunResult res;
    const double span = t_end - initial.t;
    const long total = (span <= 0.0) ? 0 : std::lround(std::ceil(span / cfg.dt - 1e-9));
    notify(state, 0);
    for (long step_idx = 1; step_idx <= total; ++step_idx) {
        const double target = (step_idx == total) ? t_end : initial.t + step_idx * cfg.dt;
        SolverConfig scfg = cfg;
        scfg.dt = target - state.t;
        state = step(state, scfg, c, k);
        state.t = target;

        double dev = 0.0;
        for (std::size_t i = 0; i < state.n.plane_size(); ++i) {
            const double nx = state.n.comp(0)[i], ny = state.n.comp(1)[i],
                         nz = state.n.comp(2)[i];
            dev = std::max(dev, std::abs(std::sqrt(nx * nx + ny * ny + nz * nz) - 1.0));
        }
        res.max_unit_deviation = std::max(res.max_unit_deviation, dev);
        const Field div = spectral::divergence2(state.v);
        res.max_divergence = std::max(res.max_divergence, linf_comp(div, 0));

        if (step_idx < total) notify(state, step_idx);
    }
    // the final state is always observed, whatever the stride
    if (total > 0) notify_all(state, total);
    res.final_state = std::move(state);
    res.steps = total;
    return res;
}

} // namespace el2d
