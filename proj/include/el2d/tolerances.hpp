#ifndef EL2D_TOLERANCES_HPP
#define EL2D_TOLERANCES_HPP

namespace el2d::tol {

// Absolute tolerances used by constructors and runtime checks.
inline constexpr double parodi = 1e-12;
inline constexpr double sym = 1e-12;
inline constexpr double form = 1e-10;
inline constexpr double unit = 1e-12;
inline constexpr double divergence = 1e-10;
inline constexpr double perp = 1e-10;

} // namespace el2d::tol

#endif
