#ifndef EL2D_DETAIL_LEVI_CIVITA_HPP
#define EL2D_DETAIL_LEVI_CIVITA_HPP

namespace el2d::detail {

/// eps_{m,a,l} c_m for 0-based (a,l); the antisymmetric contraction used by
/// the curl blocks of the elastic tensors.
inline double eps_contract(const double c[3], int a, int l) {
    static constexpr int idx[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
    static constexpr double sgn[3][3] = {{0.0, 1.0, -1.0}, {-1.0, 0.0, 1.0}, {1.0, -1.0, 0.0}};
    const int m = idx[a][l];
    return m < 0 ? 0.0 : sgn[a][l] * c[m];
}

} // namespace el2d::detail

#endif
