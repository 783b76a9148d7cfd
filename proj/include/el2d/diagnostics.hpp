#ifndef EL2D_DIAGNOSTICS_HPP
#define EL2D_DIAGNOSTICS_HPP

#include <span>
#include <string>
#include <vector>

#include "el2d/coefficients.hpp"
#include "el2d/dynamics.hpp"

namespace el2d {

/// One measurement of the energy balance: total energy and the five
/// dissipation rates
///   d_visc  = gamma/(1-gamma) int |grad v|^2
///   d_relax = (1/gamma1) int |n x h|^2
///   d_beta1 = beta1 int (nn:D)^2,  d_beta2 = beta2 int D:D,
///   d_beta3 = beta3 int |D.n|^2.
struct EnergyLedgerRow {
    double t = 0.0;
    double E = 0.0;
    double d_visc = 0.0;
    double d_relax = 0.0;
    double d_beta1 = 0.0;
    double d_beta2 = 0.0;
    double d_beta3 = 0.0;
};

/// Pointwise densities shared by the global ledger and the local monitors.
struct PointwiseDensities {
    Field e;       // W + Re/(2(1-gamma)) |v|^2
    Field gradv2;  // |grad v|^2
    Field nxh2;    // |n x h|^2
    Field nnD2;    // (nn : D)^2
    Field DD;      // D : D
    Field Dn2;     // |D . n|^2
    Field conc;    // |v|^2 + |grad n|^2
};

PointwiseDensities pointwise_densities(const State& s, const Coefficients& c,
                                       const ElasticConstants& k);

double energy(const State& s, const Coefficients& c, const ElasticConstants& k);
EnergyLedgerRow ledger(const State& s, const Coefficients& c, const ElasticConstants& k);

/// Cumulative time integral of y(t); fourth-order composite rule on a
/// (near-)uniform time series, falling back to trapezoid/Simpson for very
/// short series.
std::vector<double> cumulative_integral(std::span<const double> t, std::span<const double> y);

/// max over t of |E(t) + int_0^t (sum of dissipation) - E(0)|, normalised by
/// E(0) when positive. Throws EmptySeries.
double energy_law_residual(std::span<const EnergyLedgerRow> rows);

struct HigherEnergyReport {
    double total = 0.0;
    double n_diff = 0.0;      // ||n - n0||^2
    double v_l2 = 0.0;        // Re/(2(1-gamma)) ||v||^2
    double elastic = 0.0;     // int W
    double hs_grad = 0.0;     // a ||lap^s grad n||^2
    double hs_div = 0.0;      // (k1-a) ||lap^s div n||^2
    double hs_curl_cross = 0.0;  // (k2-a) ||n x lap^s curl n||^2
    double hs_curl_dot = 0.0;    // (k3-a) ||n . lap^s curl n||^2
    double v_high = 0.0;      // Re/(2(1-gamma)) ||lap^s v||^2
};

HigherEnergyReport higher_energy(const State& s, const Coefficients& c,
                                 const ElasticConstants& k, int order, const Field& n0);

/// Ball integral of the energy density e(v,n) over B_R(x0).
double local_energy(const State& s, const Coefficients& c, const ElasticConstants& k,
                    double x0, double y0, double R);
/// Same ball integral for |v|^2 + |grad n|^2.
double local_concentration(const State& s, double x0, double y0, double R);

struct ConcentrationMax {
    double x1 = 0.0, x2 = 0.0;
    double value = 0.0;
};

/// Maximum of the |v|^2 + |grad n|^2 ball integral over grid centers on a
/// `stride`-spaced lattice; ties break toward the lowest flattened index.
ConcentrationMax concentration_max(const State& s, double R, int stride);

/// ||curl v||_inf + ||grad n||_inf^2 (grid max).
double blowup_indicator(const State& s);

struct LocalSeriesRow {
    double t = 0.0;
    double local_e = 0.0;       // energy over B_R
    double local_dvisc = 0.0;   // gamma/(1-gamma) int_{B_R} |grad v|^2
    double local_drelax = 0.0;  // 1/(2 gamma1) int_{B_R} |n x h|^2
};

struct MonotonicityRow {
    double t = 0.0;
    double lhs = 0.0;    // local energy + accumulated local dissipation
    double bound = 0.0;  // (s^{1/2}/R)(1+s/R^2)^{1/2} * E0
    double rho = 0.0;    // (lhs - initial 2R energy)/bound, 0 at s = 0
};

struct MonotonicityReport {
    std::vector<MonotonicityRow> rows;
    double sup_rho = 0.0;
    double initial_2r_energy = 0.0;
    double total_initial_energy = 0.0;
};

/// Local-energy monotonicity probe: compares the accumulated local balance
/// against the dimensional bound shape and reports the empirical ratio (an
/// estimate of the unspecified constant; no pass/fail).
MonotonicityReport monotonicity_report(std::span<const LocalSeriesRow> series,
                                       double initial_2r_energy, double total_initial_energy,
                                       double R);

/// Accumulates the local series for one probe point during a run.
class LocalMonitor {
public:
    /// Requires R <= L/4 so that B_{2R} fits in the domain.
    LocalMonitor(const State& initial, const Coefficients& c, const ElasticConstants& k,
                 double x0, double y0, double R);
    void observe(const State& s);
    const std::vector<LocalSeriesRow>& series() const { return series_; }
    MonotonicityReport report() const;
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double radius() const { return R_; }

private:
    const Coefficients& c_;
    const ElasticConstants& k_;
    double x0_, y0_, R_;
    double initial_2r_energy_ = 0.0;
    double total_initial_energy_ = 0.0;
    std::vector<LocalSeriesRow> series_;
};

/// Full CSV row as written by the run driver.
struct LedgerCsvRow {
    EnergyLedgerRow core;
    double residual = 0.0;  // balance residual of the series prefix
    double blowup = 0.0;
    double conc_max = 0.0;
    double conc_x = 0.0;
    double conc_y = 0.0;
};

/// CSV: header t,E,d_visc,d_relax,d_beta1,d_beta2,d_beta3,residual,blowup,
/// conc_max,conc_x,conc_y; floats with 17 significant digits.
void write_ledger_csv(const std::string& path, std::span<const LedgerCsvRow> rows);
std::vector<LedgerCsvRow> read_ledger_csv(const std::string& path);

} // namespace el2d

#endif
