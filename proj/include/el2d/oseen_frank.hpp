#ifndef EL2D_OSEEN_FRANK_HPP
#define EL2D_OSEEN_FRANK_HPP

#include "el2d/coefficients.hpp"
#include "el2d/field.hpp"

namespace el2d {

/// Director plus every spectral derivative the elastic formulas need,
/// computed once from n. All member fields refer to n's grid.
struct ElasticState {
    Field n;          // 3 comps
    Field grad;       // 6: comp(a*3 + l) = d_{a+1} n^l
    Field lap;        // 3
    Field divn;       // 1
    Field graddivn;   // 2
    Field curln;      // 3
    Field curlcurln;  // 3
};

ElasticState make_elastic_state(const Field& n);

/// Pointwise n/|n|; throws BadParams when |n| < min_norm anywhere.
Field normalized(const Field& n, double min_norm = 0.1);

/// Oseen-Frank density
///   W = a|grad n|^2 + (k1-a)(div n)^2 + (k2-a)|n x curl n|^2
///     + (k3-a)(n . curl n)^2.
Field density(const ElasticState& st, const ElasticConstants& k);

/// The 3x3 matrix of partials dW/d(grad n); comp(a*3 + l) holds the entry
/// with derivative index a and director component l. The a = 3 row is kept
/// (its diagonal and curl blocks are nonzero) although d3 annihilates it.
Field w_p(const ElasticState& st, const ElasticConstants& k);

/// dW/dn at fixed gradient: 2(k3-k2)(n . curl n) curl n.
Field w_n(const ElasticState& st, const ElasticConstants& k);

/// Molecular field in decomposition form:
///   h = 2a lap n + 2(k1-a) grad div n - 2(k2-a) curl curl n
///       - 2(k3-k2) curl((curl n . n) n) - 2(k3-k2)(curl n . n) curl n.
Field molecular_field(const ElasticState& st, const ElasticConstants& k);

/// Independent divergence-form route: div of w_p minus w_n.
Field molecular_field_oracle(const ElasticState& st, const ElasticConstants& k);

/// Unit-length-free variant used by the regularised stepping mode:
///   2a lap n + 2(k1-a) grad div n - 2(k2-a) curl(n x (curl n x n))
///   - 2(k3-a) curl((n . curl n) n) - 2(k3-k2)(n . curl n) curl n.
Field molecular_field_general(const ElasticState& st, const ElasticConstants& k);

/// LHS - RHS of the pointwise identity
///   (div w_p) . n = -2 k2 |grad n|^2 - 2(k3-k2)(n.curl n)^2
///                   - 2(k1-k2)(div n)^2 + 2(k1-k2) div(n_12 div n).
Field wp_dot_n_residual(const ElasticState& st, const ElasticConstants& k);

} // namespace el2d

#endif
