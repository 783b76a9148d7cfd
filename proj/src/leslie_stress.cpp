#include "el2d/leslie_stress.hpp"

#include <cmath>

#include "el2d/spectral.hpp"

namespace el2d {

Kinematics kinematics(const Field& v, const Field& n, const Field& n_t) {
    const Grid& g = v.grid();
    if (v.comps() != 2 || n.comps() != 3 || n_t.comps() != 3)
        throw BadParams("kinematics: expected v(2), n(3), n_t(3)");
    const Field dv = spectral::gradient(v);  // comp(a*2 + i) = d_{a+1} v^i
    const Field dn = spectral::gradient(n);  // comp(a*3 + l) = d_{a+1} n^l

    Kinematics kin{Field(g, 9), Field(g, 9), Field(g, 9), Field(g, 3)};
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t) {
        double grad[2][2];  // grad[i][j] = d_i v^j
        for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i) grad[a][i] = dv.comp(a * 2 + i)[t];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                kin.kappa.comp(i * 3 + j)[t] = grad[j][i];
                kin.D.comp(i * 3 + j)[t] = 0.5 * (grad[i][j] + grad[j][i]);
                kin.Omega.comp(i * 3 + j)[t] = 0.5 * (grad[i][j] - grad[j][i]);
            }
        const double n_loc[3] = {n.comp(0)[t], n.comp(1)[t], n.comp(2)[t]};
        const double vx = v.comp(0)[t], vy = v.comp(1)[t];
        for (int l = 0; l < 3; ++l) {
            const double adv = vx * dn.comp(l)[t] + vy * dn.comp(3 + l)[t];
            double om_n = 0.0;  // (Omega.n)_l, third row/col of Omega vanish
            if (l < 2)
                for (int j = 0; j < 2; ++j) om_n += kin.Omega.comp(l * 3 + j)[t] * n_loc[j];
            kin.N.comp(l)[t] = n_t.comp(l)[t] + adv + om_n;
        }
    }
    return kin;
}

Field leslie_stress(const LeslieCoefficients& a, const Kinematics& kin, const Field& n) {
    const Grid& g = n.grid();
    Field s(g, 9);
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t) {
        const double nl[3] = {n.comp(0)[t], n.comp(1)[t], n.comp(2)[t]};
        const double Nl[3] = {kin.N.comp(0)[t], kin.N.comp(1)[t], kin.N.comp(2)[t]};
        double D[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) D[i][j] = kin.D.comp(i * 3 + j)[t];
        double Dn[3] = {0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) Dn[i] += D[i][j] * nl[j];
        const double nDn = nl[0] * Dn[0] + nl[1] * Dn[1] + nl[2] * Dn[2];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                s.comp(i * 3 + j)[t] = a.alpha1 * nDn * nl[i] * nl[j] +
                                       a.alpha2 * nl[i] * Nl[j] + a.alpha3 * Nl[i] * nl[j] +
                                       a.alpha4 * D[i][j] + a.alpha5 * nl[i] * Dn[j] +
                                       a.alpha6 * Dn[i] * nl[j];
            }
    }
    return s;
}

Field ericksen_stress(const ElasticState& st, const ElasticConstants& k) {
    const Field wp = w_p(st, k);
    const Grid& g = st.n.grid();
    Field s(g, 9);
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double acc = 0.0;
                for (int l = 0; l < 3; ++l)
                    acc += wp.comp(i * 3 + l)[t] * st.grad.comp(j * 3 + l)[t];
                s.comp(i * 3 + j)[t] = -acc;
            }
    return s;
}

Field regularized_stress(const DerivedCoefficients& d, const Field& n, const Field& D,
                         const Field& h) {
    const Grid& g = n.grid();
    Field s(g, 9);
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t) {
        const double nl[3] = {n.comp(0)[t], n.comp(1)[t], n.comp(2)[t]};
        const double hl[3] = {h.comp(0)[t], h.comp(1)[t], h.comp(2)[t]};
        const double nn = nl[0] * nl[0] + nl[1] * nl[1] + nl[2] * nl[2];
        double Dm[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) Dm[i][j] = D.comp(i * 3 + j)[t];
        double Dn[3] = {0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) Dn[i] += Dm[i][j] * nl[j];
        const double nDn = nl[0] * Dn[0] + nl[1] * Dn[1] + nl[2] * Dn[2];
        // q = n x (h x n) = h|n|^2 - (n.h) n
        const double nh = nl[0] * hl[0] + nl[1] * hl[1] + nl[2] * hl[2];
        const double q[3] = {hl[0] * nn - nh * nl[0], hl[1] * nn - nh * nl[1],
                             hl[2] * nn - nh * nl[2]};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double s1 = d.beta1 * nDn * nl[i] * nl[j] + d.beta2 * nn * nn * Dm[i][j] +
                                  0.5 * d.beta3 * nn * (nl[i] * Dn[j] + Dn[i] * nl[j]);
                const double s2 = 0.5 * (-1.0 - d.mu2) * nl[i] * q[j] +
                                  0.5 * (1.0 - d.mu2) * q[i] * nl[j];
                s.comp(i * 3 + j)[t] = s1 + s2;
            }
    }
    return s;
}

double stress_power_residual(const LeslieCoefficients& alphas, const DerivedCoefficients& d,
                             const Field& v, const Field& n, const Field& n_t,
                             const ElasticConstants& k) {
    const Grid& g = v.grid();
    const ElasticState st = make_elastic_state(n);
    const Field h = molecular_field(st, k);
    const Kinematics kin = kinematics(v, n, n_t);
    const Field sL = leslie_stress(alphas, kin, n);
    const Field dv = spectral::gradient(v);  // comp(a*2+i) = d_{a+1} v^i

    double lhs = 0.0, rhs = 0.0;
    const std::size_t m = g.size();
    for (std::size_t t = 0; t < m; ++t) {
        // sigma^L : grad v = sigma_{ij} d_i v^j over the 2x2 block
        double pw = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) pw += sL.comp(i * 3 + j)[t] * dv.comp(i * 2 + j)[t];
        lhs -= pw;

        const double nl[3] = {n.comp(0)[t], n.comp(1)[t], n.comp(2)[t]};
        const double hl[3] = {h.comp(0)[t], h.comp(1)[t], h.comp(2)[t]};
        double D[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) D[i][j] = kin.D.comp(i * 3 + j)[t];
        double Dn[3] = {0, 0, 0};
        double DD = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Dn[i] += D[i][j] * nl[j];
                DD += D[i][j] * D[i][j];
            }
        const double nDn = nl[0] * Dn[0] + nl[1] * Dn[1] + nl[2] * Dn[2];
        const double Dn2 = Dn[0] * Dn[0] + Dn[1] * Dn[1] + Dn[2] * Dn[2];
        double h_om_n = 0.0;  // h . (Omega . n)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) h_om_n += hl[i] * kin.Omega.comp(i * 3 + j)[t] * nl[j];
        const double nh = nl[0] * hl[0] + nl[1] * hl[1] + nl[2] * hl[2];
        const double nn = nl[0] * nl[0] + nl[1] * nl[1] + nl[2] * nl[2];
        const double q[3] = {hl[0] * nn - nh * nl[0], hl[1] * nn - nh * nl[1],
                             hl[2] * nn - nh * nl[2]};
        const double q_Dn = q[0] * Dn[0] + q[1] * Dn[1] + q[2] * Dn[2];

        rhs -= d.beta1 * nDn * nDn + d.beta3 * Dn2 + d.beta2 * DD;
        rhs -= h_om_n;
        rhs -= (d.gamma2 / d.gamma1) * q_Dn;
    }
    const double area = g.cell_area();
    return std::abs(lhs * area - rhs * area);
}

} // namespace el2d
