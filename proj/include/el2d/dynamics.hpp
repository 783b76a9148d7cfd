#ifndef EL2D_DYNAMICS_HPP
#define EL2D_DYNAMICS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "el2d/coefficients.hpp"
#include "el2d/field.hpp"
#include "el2d/oseen_frank.hpp"

namespace el2d {

/// Divergence-free velocity (2 comps), unit director (3 comps), time.
struct State {
    Field v;
    Field n;
    double t = 0.0;
};

/// Validates and (optionally) repairs a state: project v onto its solenoidal
/// part, normalise n pointwise. Throws on non-finite data or when the
/// invariants fail afterwards.
State make_state(Field v, Field n, double t = 0.0, bool project = true, bool normalize = true);

enum class Scheme { rk4, imex };

struct SolverConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::rk4;
    std::optional<int> mollify_cutoff;  // engages the regularised system
    bool dealias = true;
    bool renormalize = true;
};

/// -v.grad n - n x ((Omega.n - mu1 h - mu2 D.n) x n)
Field director_rhs(const State& s, const Coefficients& c, const ElasticConstants& k);

/// LerayProject[-v.grad v + (gamma/Re) lap v + ((1-gamma)/Re) div(sigma^L + sigma^E)],
/// with the N inside sigma^L evaluated from director_rhs of the same state.
Field velocity_rhs(const State& s, const Coefficients& c, const ElasticConstants& k);

/// Zero-mean pressure from the periodic Poisson problem
///   lap p = ((1-gamma)/Re) d_i d_j sigma_{ij} - d_i d_j (v^i v^j).
Field pressure_field(const State& s, const Coefficients& c, const ElasticConstants& k);

/// Advances one step of config.dt. Throws NonFinite on NaN/Inf and UnitDrift
/// when the pre-renormalisation drift of |n| exceeds 0.1.
State step(const State& s, const SolverConfig& cfg, const Coefficients& c,
           const ElasticConstants& k);

/// Per-step drift diagnostics of the last step() call on this thread:
/// max | |n|-1 | before renormalisation.
double last_step_unit_drift();

struct Observer {
    int stride = 1;
    std::function<void(const State&, long step_index)> fn;
};

struct RunResult {
    State final_state;
    long steps = 0;
    double max_unit_deviation = 0.0;  // post-renormalisation, over all steps
    double max_divergence = 0.0;      // ||div v||_inf, over all steps
};

/// Repeated step() from initial.t to t_end (the last step is shortened if
/// needed). Observers fire on their stride, at step 0 and at the final step,
/// with strictly increasing times. In mollified mode the initial data is
/// mollified once before stepping. Step failures carry the failing time.
RunResult run(const State& initial, const SolverConfig& cfg, const Coefficients& c,
              const ElasticConstants& k, double t_end, const std::vector<Observer>& observers);

} // namespace el2d

#endif
