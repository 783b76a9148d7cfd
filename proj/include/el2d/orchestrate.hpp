#ifndef EL2D_ORCHESTRATE_HPP
#define EL2D_ORCHESTRATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "el2d/config.hpp"
#include "el2d/diagnostics.hpp"

namespace el2d {

struct RunArtifacts {
    std::string out_dir;
    long steps = 0;
    double final_energy = 0.0;
    double final_residual = 0.0;
    double blowup_integral = 0.0;
    double max_unit_deviation = 0.0;
    double max_divergence = 0.0;
    std::vector<double> sup_rho;  // one per monitor point
    std::vector<LedgerCsvRow> ledger_rows;
};

/// Full batch run: builds the state from the config, steps to t_end, writes
/// config echo, coefficient verdict, ledger CSV, snapshots and per-point
/// monotonicity series into the output directory.
RunArtifacts run_simulation(const RunConfig& cfg, const std::string& out_dir_override = "",
                            bool quiet = false);

struct IdentityCheck {
    std::string name;
    double metric = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// The oracle suites on seeded random smooth states: molecular-field route
/// equivalence, the pointwise (div w_p).n identity, and the stress-power
/// identity.
std::vector<IdentityCheck> verify_identities(std::uint64_t seed, int n_states, int grid_n,
                                             double length);

struct CertifyReport {
    double residual = 0.0;
    double reported_residual = 0.0;  // last row of the CSV
    int sign_violations = 0;
    std::size_t rows = 0;
};

/// Recomputes the balance residual from a ledger CSV and checks the
/// dissipation sign structure.
CertifyReport certify_ledger(const std::string& path);

} // namespace el2d

#endif
