#include "el2d/spectral.hpp"

#include <cmath>

namespace el2d::spectral {

namespace {
constexpr std::complex<double> I{0.0, 1.0};

double smoothstep(double u) { return u * u * (3.0 - 2.0 * u); }

double cutoff_phi(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    return smoothstep(2.0 - r);
}
} // namespace

SpectralField analyze(const Field& f) {
    SpectralField s(f.grid(), f.comps());
    for (int c = 0; c < f.comps(); ++c) f.grid().forward(f.comp_span(c), s.comp(c));
    return s;
}

Field synthesize(const SpectralField& s) {
    Field f(s.grid(), s.comps());
    for (int c = 0; c < s.comps(); ++c) s.grid().inverse(s.comp_span(c), f.comp(c));
    return f;
}

SpectralField diff(const SpectralField& s, int axis) {
    const Grid& g = s.grid();
    SpectralField out(g, s.comps());
    const int cols = g.spec_cols();
    for (int c = 0; c < s.comps(); ++c) {
        const std::complex<double>* in = s.comp(c);
        std::complex<double>* o = out.comp(c);
        for (int i = 0; i < g.n(); ++i) {
            const double k1 = g.k1_deriv(i);
            for (int j = 0; j < cols; ++j) {
                const double k = (axis == 1) ? k1 : g.k2_deriv(j);
                o[std::size_t(i) * cols + j] = I * k * in[std::size_t(i) * cols + j];
            }
        }
    }
    return out;
}

SpectralField laplacian(const SpectralField& s) {
    const Grid& g = s.grid();
    SpectralField out(g, s.comps());
    const int cols = g.spec_cols();
    for (int c = 0; c < s.comps(); ++c) {
        const std::complex<double>* in = s.comp(c);
        std::complex<double>* o = out.comp(c);
        for (int i = 0; i < g.n(); ++i) {
            const double k1 = g.k1_deriv(i);
            for (int j = 0; j < cols; ++j) {
                const double k2 = g.k2_deriv(j);
                o[std::size_t(i) * cols + j] =
                    -(k1 * k1 + k2 * k2) * in[std::size_t(i) * cols + j];
            }
        }
    }
    return out;
}

void dealias_inplace(SpectralField& s) {
    const Grid& g = s.grid();
    const int cols = g.spec_cols();
    const int kc = g.n() / 3;
    for (int c = 0; c < s.comps(); ++c) {
        std::complex<double>* p = s.comp(c);
        for (int i = 0; i < g.n(); ++i) {
            const int m1 = (i <= g.n() / 2) ? i : i - g.n();
            for (int j = 0; j < cols; ++j) {
                if (std::abs(m1) > kc || j > kc) p[std::size_t(i) * cols + j] = 0.0;
            }
        }
    }
}

void mollify_inplace(SpectralField& s, int cutoff) {
    if (cutoff < 1) throw BadParams("mollify: cutoff must be >= 1");
    const Grid& g = s.grid();
    const int cols = g.spec_cols();
    for (int c = 0; c < s.comps(); ++c) {
        std::complex<double>* p = s.comp(c);
        for (int i = 0; i < g.n(); ++i) {
            const int m1 = (i <= g.n() / 2) ? i : i - g.n();
            for (int j = 0; j < cols; ++j) {
                const double m = std::sqrt(double(m1) * m1 + double(j) * j);
                p[std::size_t(i) * cols + j] *= cutoff_phi(m / cutoff);
            }
        }
    }
}

void leray_inplace(SpectralField& v) {
    // The derivative wavenumbers (Nyquist zeroed) keep the projection
    // hermitian-symmetric in the folded r2c layout and make div o P vanish
    // identically for arbitrary input.
    const Grid& g = v.grid();
    if (v.comps() != 2) throw BadParams("leray: expected a 2-component field");
    const int cols = g.spec_cols();
    std::complex<double>* a = v.comp(0);
    std::complex<double>* b = v.comp(1);
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.k1_deriv(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.k2_deriv(j);
            const double kk = k1 * k1 + k2 * k2;
            if (kk == 0.0) continue;
            const std::size_t idx = std::size_t(i) * cols + j;
            const std::complex<double> kdotv = k1 * a[idx] + k2 * b[idx];
            a[idx] -= k1 * kdotv / kk;
            b[idx] -= k2 * kdotv / kk;
        }
    }
}

double l2_norm(const SpectralField& s) {
    const Grid& g = s.grid();
    const int cols = g.spec_cols();
    double sum = 0.0;
    for (int c = 0; c < s.comps(); ++c) {
        const std::complex<double>* p = s.comp(c);
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < cols; ++j) {
                const double w = (j == 0 || j == g.n() / 2) ? 1.0 : 2.0;
                sum += w * std::norm(p[std::size_t(i) * cols + j]);
            }
    }
    // raw-DFT Parseval: sum_x |f|^2 = (1/N^2) sum_k |f_hat|^2
    return std::sqrt(sum / double(g.size()) * g.cell_area());
}

Field diff(const Field& f, int axis) { return synthesize(diff(analyze(f), axis)); }

Field gradient(const Field& f) {
    const SpectralField s = analyze(f);
    Field out(f.grid(), 2 * f.comps());
    for (int a = 0; a < 2; ++a) {
        const SpectralField d = diff(s, a + 1);
        for (int l = 0; l < f.comps(); ++l)
            f.grid().inverse(d.comp_span(l), out.comp(a * f.comps() + l));
    }
    return out;
}

Field divergence2(const Field& f) {
    const SpectralField s = analyze(f);
    const Grid& g = f.grid();
    SpectralField ds(g, 1);
    const int cols = g.spec_cols();
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.k1_deriv(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.k2_deriv(j);
            const std::size_t idx = std::size_t(i) * cols + j;
            ds.comp(0)[idx] = I * (k1 * s.comp(0)[idx] + k2 * s.comp(1)[idx]);
        }
    }
    return synthesize(ds);
}

Field laplacian(const Field& f) { return synthesize(laplacian(analyze(f))); }

Field curl3(const Field& f) {
    if (f.comps() != 3) throw BadParams("curl3: expected a 3-component field");
    const SpectralField s = analyze(f);
    const SpectralField d1 = diff(s, 1), d2 = diff(s, 2);
    Field out(f.grid(), 3);
    const Grid& g = f.grid();
    // (d2 f^2, -d1 f^2, d1 f^1 - d2 f^0)
    g.inverse(d2.comp_span(2), out.comp(0));
    {
        std::vector<std::complex<double>> tmp(g.spec_size());
        for (std::size_t t = 0; t < tmp.size(); ++t) tmp[t] = -d1.comp(2)[t];
        g.inverse(tmp, out.comp(1));
        for (std::size_t t = 0; t < tmp.size(); ++t) tmp[t] = d1.comp(1)[t] - d2.comp(0)[t];
        g.inverse(tmp, out.comp(2));
    }
    return out;
}

Field leray_project(const Field& v) {
    SpectralField s = analyze(v);
    leray_inplace(s);
    return synthesize(s);
}

Field mollify(const Field& f, int cutoff) {
    SpectralField s = analyze(f);
    mollify_inplace(s, cutoff);
    return synthesize(s);
}

namespace {
void check_radius(const Grid& g, double R) {
    if (!(R > 0.0)) throw BadParams("ball integral: R must be positive");
    if (R > g.length() / 2.0) throw RadiusTooLarge("ball integral: R exceeds L/2");
}
} // namespace

double ball_integral(const Field& e, int comp, double x0, double y0, double R) {
    const Grid& g = e.grid();
    check_radius(g, R);
    const double R2 = R * R;
    const double* p = e.comp(comp);
    double sum = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        const double dx = std::remainder(g.x1(i) - x0, g.length());
        for (int j = 0; j < g.n(); ++j) {
            const double dy = std::remainder(g.x2(j) - y0, g.length());
            if (dx * dx + dy * dy <= R2) sum += p[std::size_t(i) * g.n() + j];
        }
    }
    return sum * g.cell_area();
}

Field ball_integral_all(const Field& e, int comp, double R) {
    const Grid& g = e.grid();
    check_radius(g, R);
    Field ind(g, 1);
    const double R2 = R * R;
    for (int i = 0; i < g.n(); ++i) {
        const double dx = std::remainder(g.x1(i), g.length());
        for (int j = 0; j < g.n(); ++j) {
            const double dy = std::remainder(g.x2(j), g.length());
            if (dx * dx + dy * dy <= R2) ind.at(0, i, j) = 1.0;
        }
    }
    SpectralField se(g, 1);
    g.forward(e.comp_span(comp), se.comp(0));
    const SpectralField si = analyze(ind);
    // the indicator is even, so correlation equals convolution
    for (std::size_t t = 0; t < se.plane_size(); ++t) se.comp(0)[t] *= si.comp(0)[t];
    Field out = synthesize(se);
    out *= g.cell_area();
    return out;
}

} // namespace el2d::spectral
