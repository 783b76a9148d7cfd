// el2d: pseudospectral solver and verification suite for the 2-D
// Ericksen-Leslie system on a periodic box.
//
// Subcommands:
//   run                 full simulation from a config file
//   check-coefficients  derived coefficients + admissibility verdict
//   verify-identities   oracle suites on seeded random states
//   certify-ledger      recheck the balance residual of a ledger CSV
//
// Exit codes: 0 ok, 2 config error, 3 numerical failure, 4 identity failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "el2d/orchestrate.hpp"

using namespace el2d;

namespace {

int cmd_check_coefficients(const std::string& config_path) {
    const RunConfig cfg = load_config(config_path);
    const Coefficients c(cfg.coeffs);
    std::printf("gamma1 = %.17g\ngamma2 = %.17g\nmu1 = %.17g\nmu2 = %.17g\n",
                c.derived.gamma1, c.derived.gamma2, c.derived.mu1, c.derived.mu2);
    std::printf("beta1 = %.17g\nbeta2 = %.17g\nbeta3 = %.17g\n", c.derived.beta1,
                c.derived.beta2, c.derived.beta3);
    const Betas b{c.derived.beta1, c.derived.beta2, c.derived.beta3};
    std::printf("admissible (2-D): %s\n", admissible(b, 2) ? "yes" : "no");
    std::printf("admissible (3-D): %s\n", admissible(b, 3) ? "yes" : "no");
    return 0;
}

int cmd_verify_identities(std::uint64_t seed, int states, int grid_n, double length,
                          bool quiet) {
    const auto checks = verify_identities(seed, states, grid_n, length);
    bool all_pass = true;
    if (!quiet)
        std::printf("%-55s %12s %10s %s\n", "identity", "metric", "tol", "result");
    for (const auto& ch : checks) {
        all_pass = all_pass && ch.pass;
        std::printf("%-55s %12.3e %10.1e %s\n", ch.name.c_str(), ch.metric, ch.tolerance,
                    ch.pass ? "pass" : "FAIL");
    }
    return all_pass ? 0 : 4;
}

int cmd_certify_ledger(const std::string& path) {
    const CertifyReport rep = certify_ledger(path);
    std::printf("rows = %zu\nenergy_law_residual = %.17g\nreported_residual = %.17g\n"
                "sign_violations = %d\n",
                rep.rows, rep.residual, rep.reported_residual, rep.sign_violations);
    const bool residual_matches = rep.residual == rep.reported_residual;
    std::printf("residual_matches_reported = %s\n", residual_matches ? "yes" : "no");
    return (rep.sign_violations == 0 && residual_matches) ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral 2-D Ericksen-Leslie solver and verification suite"};
    app.require_subcommand(1);

    std::string config_path, out_dir, ledger_path;
    std::uint64_t seed = 1;
    bool quiet = false;
    int vi_states = 5, vi_n = 64;
    double vi_length = 2.0 * M_PI;

    CLI::App* run_cmd = app.add_subcommand("run", "run a simulation from a config file");
    run_cmd->add_option("--config", config_path, "config file path")->required();
    run_cmd->add_option("--out", out_dir, "output directory (overrides output.directory)");
    run_cmd->add_option("--seed", seed, "random seed");
    run_cmd->add_flag("--quiet", quiet, "suppress progress output");

    CLI::App* chk_cmd =
        app.add_subcommand("check-coefficients", "print derived coefficients and verdict");
    chk_cmd->add_option("--config", config_path, "config file path")->required();

    CLI::App* vi_cmd =
        app.add_subcommand("verify-identities", "run the oracle suites on random states");
    vi_cmd->add_option("--seed", seed, "random seed");
    vi_cmd->add_option("--states", vi_states, "number of random states per suite");
    vi_cmd->add_option("--grid", vi_n, "grid size");
    vi_cmd->add_option("--length", vi_length, "domain length");
    vi_cmd->add_flag("--quiet", quiet, "suppress the table header");

    CLI::App* cl_cmd =
        app.add_subcommand("certify-ledger", "recheck residual and signs of a ledger CSV");
    cl_cmd->add_option("ledger", ledger_path, "ledger CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const RunConfig cfg = load_config(config_path);
            run_simulation(cfg, out_dir, quiet);
            return 0;
        }
        if (chk_cmd->parsed()) return cmd_check_coefficients(config_path);
        if (vi_cmd->parsed()) return cmd_verify_identities(seed, vi_states, vi_n, vi_length, quiet);
        if (cl_cmd->parsed()) return cmd_certify_ledger(ledger_path);
    } catch (const ParseError& e) {
        std::cerr << "config parse error (line " << e.line << "): " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ParodiViolation& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NonpositiveGamma1& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownPreset& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const RadiusTooLarge& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NonFinite& e) {
        std::cerr << "numerical failure at t = " << e.time << ": " << e.what() << "\n";
        return 3;
    } catch (const UnitDrift& e) {
        std::cerr << "numerical failure at t = " << e.time << ": " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
