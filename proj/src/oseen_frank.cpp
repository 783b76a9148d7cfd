#include "el2d/oseen_frank.hpp"

#include <algorithm>
#include <cmath>

#include "el2d/detail/levi_civita.hpp"
#include "el2d/spectral.hpp"

namespace el2d {

using detail::eps_contract;

namespace {
constexpr std::complex<double> I{0.0, 1.0};
} // namespace

ElasticState make_elastic_state(const Field& n) {
    if (n.comps() != 3) throw BadParams("director field must have 3 components");
    const Grid& g = n.grid();
    ElasticState st;
    st.n = n;
    const SpectralField ns = spectral::analyze(n);
    const SpectralField d1 = spectral::diff(ns, 1);
    const SpectralField d2 = spectral::diff(ns, 2);

    st.grad = Field(g, 6);
    for (int l = 0; l < 3; ++l) {
        g.inverse(d1.comp_span(l), st.grad.comp(l));
        g.inverse(d2.comp_span(l), st.grad.comp(3 + l));
    }
    st.lap = spectral::synthesize(spectral::laplacian(ns));

    // div n = d1 n^1 + d2 n^2, grad div n, curl n, curl curl n
    SpectralField div_s(g, 1);
    for (std::size_t t = 0; t < div_s.plane_size(); ++t)
        div_s.comp(0)[t] = d1.comp(0)[t] + d2.comp(1)[t];
    st.divn = spectral::synthesize(div_s);
    const SpectralField gd1 = spectral::diff(div_s, 1);
    const SpectralField gd2 = spectral::diff(div_s, 2);
    st.graddivn = Field(g, 2);
    g.inverse(gd1.comp_span(0), st.graddivn.comp(0));
    g.inverse(gd2.comp_span(0), st.graddivn.comp(1));

    SpectralField curl_s(g, 3);
    for (std::size_t t = 0; t < curl_s.plane_size(); ++t) {
        curl_s.comp(0)[t] = d2.comp(2)[t];
        curl_s.comp(1)[t] = -d1.comp(2)[t];
        curl_s.comp(2)[t] = d1.comp(1)[t] - d2.comp(0)[t];
    }
    st.curln = spectral::synthesize(curl_s);
    const SpectralField c1 = spectral::diff(curl_s, 1);
    const SpectralField c2 = spectral::diff(curl_s, 2);
    SpectralField cc_s(g, 3);
    for (std::size_t t = 0; t < cc_s.plane_size(); ++t) {
        cc_s.comp(0)[t] = c2.comp(2)[t];
        cc_s.comp(1)[t] = -c1.comp(2)[t];
        cc_s.comp(2)[t] = c1.comp(1)[t] - c2.comp(0)[t];
    }
    st.curlcurln = spectral::synthesize(cc_s);
    return st;
}

Field normalized(const Field& n, double min_norm) {
    Field out = n;
    const std::size_t m = n.plane_size();
    for (std::size_t t = 0; t < m; ++t) {
        const double nx = n.comp(0)[t], ny = n.comp(1)[t], nz = n.comp(2)[t];
        const double r = std::sqrt(nx * nx + ny * ny + nz * nz);
        if (r < min_norm) throw BadParams("director norm fell below the normalisation floor");
        out.comp(0)[t] = nx / r;
        out.comp(1)[t] = ny / r;
        out.comp(2)[t] = nz / r;
    }
    return out;
}

Field density(const ElasticState& st, const ElasticConstants& k) {
    const std::size_t m = st.n.plane_size();
    Field w(st.n.grid(), 1);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        double grad2 = 0.0;
        for (int q = 0; q < 6; ++q) {
            const double v = st.grad.comp(q)[t];
            grad2 += v * v;
        }
        const double dv = st.divn.comp(0)[t];
        const double nxc[3] = {n[1] * c[2] - n[2] * c[1], n[2] * c[0] - n[0] * c[2],
                               n[0] * c[1] - n[1] * c[0]};
        const double nxc2 = nxc[0] * nxc[0] + nxc[1] * nxc[1] + nxc[2] * nxc[2];
        const double ndc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
        w.comp(0)[t] = k.a * grad2 + (k.k1 - k.a) * dv * dv + (k.k2 - k.a) * nxc2 +
                       (k.k3 - k.a) * ndc * ndc;
    }
    return w;
}

Field w_p(const ElasticState& st, const ElasticConstants& k) {
    const std::size_t m = st.n.plane_size();
    Field wp(st.n.grid(), 9);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double dv = st.divn.comp(0)[t];
        const double ndc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
        for (int a = 0; a < 3; ++a)
            for (int l = 0; l < 3; ++l) {
                const double dg = (a < 2) ? st.grad.comp(a * 3 + l)[t] : 0.0;
                double v = 2.0 * k.a * dg;
                if (a == l) v += 2.0 * (k.k1 - k.a) * dv;
                v += 2.0 * (k.k2 - k.a) * eps_contract(c, a, l);
                v += 2.0 * (k.k3 - k.k2) * ndc * eps_contract(n, a, l);
                wp.comp(a * 3 + l)[t] = v;
            }
    }
    return wp;
}

Field w_n(const ElasticState& st, const ElasticConstants& k) {
    const std::size_t m = st.n.plane_size();
    Field wn(st.n.grid(), 3);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double ndc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
        for (int l = 0; l < 3; ++l) wn.comp(l)[t] = 2.0 * (k.k3 - k.k2) * ndc * c[l];
    }
    return wn;
}

namespace {
// (curl n . n) n, pointwise
Field ndotcurl_times_n(const ElasticState& st) {
    const std::size_t m = st.n.plane_size();
    Field out(st.n.grid(), 3);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double ndc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
        for (int l = 0; l < 3; ++l) out.comp(l)[t] = ndc * n[l];
    }
    return out;
}
} // namespace

Field molecular_field(const ElasticState& st, const ElasticConstants& k) {
    const Field curl_ncn = spectral::curl3(ndotcurl_times_n(st));
    const std::size_t m = st.n.plane_size();
    Field h(st.n.grid(), 3);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double ndc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
        for (int l = 0; l < 3; ++l) {
            double v = 2.0 * k.a * st.lap.comp(l)[t];
            if (l < 2) v += 2.0 * (k.k1 - k.a) * st.graddivn.comp(l)[t];
            v -= 2.0 * (k.k2 - k.a) * st.curlcurln.comp(l)[t];
            v -= 2.0 * (k.k3 - k.k2) * curl_ncn.comp(l)[t];
            v -= 2.0 * (k.k3 - k.k2) * ndc * c[l];
            h.comp(l)[t] = v;
        }
    }
    return h;
}

Field molecular_field_oracle(const ElasticState& st, const ElasticConstants& k) {
    const Field wp = w_p(st, k);
    const Field wn = w_n(st, k);
    const Grid& g = st.n.grid();
    // spectral divergence over the first two rows of w_p
    Field rows(g, 6);
    for (int a = 0; a < 2; ++a)
        for (int l = 0; l < 3; ++l)
            std::copy(wp.comp(a * 3 + l), wp.comp(a * 3 + l) + g.size(),
                      rows.comp(a * 3 + l));
    const SpectralField rs = spectral::analyze(rows);
    SpectralField hs(g, 3);
    const int cols = g.spec_cols();
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < g.n(); ++i) {
            const double k1 = g.k1_deriv(i);
            for (int j = 0; j < cols; ++j) {
                const double k2 = g.k2_deriv(j);
                const std::size_t idx = std::size_t(i) * cols + j;
                hs.comp(l)[idx] = I * (k1 * rs.comp(l)[idx] + k2 * rs.comp(3 + l)[idx]);
            }
        }
    }
    Field h = spectral::synthesize(hs);
    h -= wn;
    return h;
}

Field molecular_field_general(const ElasticState& st, const ElasticConstants& k) {
    const Grid& g = st.n.grid();
    const std::size_t m = st.n.plane_size();
    // n x (curl n x n) and (n . curl n) n, both pointwise
    Field nxcxn(g, 3);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double cxn[3] = {c[1] * n[2] - c[2] * n[1], c[2] * n[0] - c[0] * n[2],
                               c[0] * n[1] - c[1] * n[0]};
        nxcxn.comp(0)[t] = n[1] * cxn[2] - n[2] * cxn[1];
        nxcxn.comp(1)[t] = n[2] * cxn[0] - n[0] * cxn[2];
        nxcxn.comp(2)[t] = n[0] * cxn[1] - n[1] * cxn[0];
    }
    const Field curl_a = spectral::curl3(nxcxn);
    const Field curl_b = spectral::curl3(ndotcurl_times_n(st));
    Field h(g, 3);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double ndc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
        for (int l = 0; l < 3; ++l) {
            double v = 2.0 * k.a * st.lap.comp(l)[t];
            if (l < 2) v += 2.0 * (k.k1 - k.a) * st.graddivn.comp(l)[t];
            v -= 2.0 * (k.k2 - k.a) * curl_a.comp(l)[t];
            v -= 2.0 * (k.k3 - k.a) * curl_b.comp(l)[t];
            v -= 2.0 * (k.k3 - k.k2) * ndc * c[l];
            h.comp(l)[t] = v;
        }
    }
    return h;
}

Field wp_dot_n_residual(const ElasticState& st, const ElasticConstants& k) {
    const Field wp = w_p(st, k);
    const Grid& g = st.n.grid();
    const std::size_t m = st.n.plane_size();

    Field rows(g, 6);
    for (int a = 0; a < 2; ++a)
        for (int l = 0; l < 3; ++l)
            std::copy(wp.comp(a * 3 + l), wp.comp(a * 3 + l) + g.size(),
                      rows.comp(a * 3 + l));
    const SpectralField rs = spectral::analyze(rows);
    SpectralField div_s(g, 3);
    const int cols = g.spec_cols();
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < g.n(); ++i) {
            const double k1 = g.k1_deriv(i);
            for (int j = 0; j < cols; ++j) {
                const double k2 = g.k2_deriv(j);
                const std::size_t idx = std::size_t(i) * cols + j;
                div_s.comp(l)[idx] = I * (k1 * rs.comp(l)[idx] + k2 * rs.comp(3 + l)[idx]);
            }
        }
    const Field div_wp = spectral::synthesize(div_s);

    // div(n_12 div n) for the right-hand side
    Field ndiv(g, 2);
    for (std::size_t t = 0; t < m; ++t) {
        const double dv = st.divn.comp(0)[t];
        ndiv.comp(0)[t] = st.n.comp(0)[t] * dv;
        ndiv.comp(1)[t] = st.n.comp(1)[t] * dv;
    }
    const Field div_ndiv = spectral::divergence2(ndiv);

    Field res(g, 1);
    for (std::size_t t = 0; t < m; ++t) {
        const double n[3] = {st.n.comp(0)[t], st.n.comp(1)[t], st.n.comp(2)[t]};
        const double c[3] = {st.curln.comp(0)[t], st.curln.comp(1)[t], st.curln.comp(2)[t]};
        const double ndc = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
        const double dv = st.divn.comp(0)[t];
        double grad2 = 0.0;
        for (int q = 0; q < 6; ++q) {
            const double v = st.grad.comp(q)[t];
            grad2 += v * v;
        }
        const double lhs = div_wp.comp(0)[t] * n[0] + div_wp.comp(1)[t] * n[1] +
                           div_wp.comp(2)[t] * n[2];
        const double rhs = -2.0 * k.k2 * grad2 - 2.0 * (k.k3 - k.k2) * ndc * ndc -
                           2.0 * (k.k1 - k.k2) * dv * dv +
                           2.0 * (k.k1 - k.k2) * div_ndiv.comp(0)[t];
        res.comp(0)[t] = lhs - rhs;
    }
    return res;
}

} // namespace el2d
