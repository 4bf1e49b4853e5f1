#pragma once

#include "epur/relations.hpp"
#include "epur/state_io.hpp"
#include "epur/svg.hpp"
#include "epur/table.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace epur {

/// Shared run parameters (CLI-level view of EvalConfig plus bookkeeping).
struct RunConfig {
    EvalConfig eval;
    int nmax = 64;
    double hbar = 1.0;
    std::uint64_t seed = 1;
    double tol = 1e-4; // slack tolerance wherever a numeric entropy enters
    std::string out_dir = ".";
    std::string format = "csv"; // csv | json
    bool plot = false;
};

/// Outcome of one command: the data table, a machine-readable manifest,
/// violation count (every violation also serialized for replay), and an
/// optional plot.
struct CommandResult {
    std::string name;
    Table table;
    nlohmann::json manifest;
    int violations = 0;
    std::vector<nlohmann::json> offenders;
    std::optional<std::string> svg;
    std::string summary;
};

/// Writes table/manifest/offenders/plot into cfg.out_dir; returns paths.
std::vector<std::string> write_outputs(const CommandResult& r,
                                       const RunConfig& cfg);

/// Independent RNG stream for one trial, mixed from (seed, index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Joint-entropy scan over extremal passive states N = 0..n_top.
CommandResult cmd_passive_scan(int n_top, const RunConfig& cfg);

/// Haar-random pure states vs the covariance-corrected bound, sorted by
/// correlation coefficient.
CommandResult cmd_random_scan(int trials, int dim, const RunConfig& cfg);

/// Slightly non-Gaussian states around a rotated squeezed state
/// (squeeze factor s = e^r along angle theta, admixture epsilon).
CommandResult cmd_neighborhood(double s, double theta, double eps, int trials,
                               int dim, const RunConfig& cfg);

struct StatePair {
    std::string label;
    FockDensity a;
    FockDensity b;
};

/// The three reference mixtures for the concavity test.
std::vector<StatePair> default_concavity_pairs(double hbar);

/// Concavity defect of the uncertainty functional over binary mixtures.
CommandResult cmd_concavity(const std::vector<StatePair>& pairs,
                            int lambda_points, const RunConfig& cfg);

/// Derivative-free minimization of the tight-relation slack over pure
/// states of the given dimension; reports, never asserts.
CommandResult cmd_counterexample(int dim, int restarts, const RunConfig& cfg);

/// Saturation sweep over rotated squeezed vacua.
CommandResult cmd_gaussian_saturation(const std::vector<double>& r_grid,
                                      const std::vector<double>& theta_grid,
                                      const RunConfig& cfg);

/// Full relation report for one state loaded from a JSON file.
CommandResult cmd_check(const LoadedState& state, const RunConfig& cfg);

/// Closed-form BBM gap of a rotated squeezed vacuum:
/// (1/2) ln(cosh^2 2r - cos^2(2 theta) sinh^2 2r).
double bbm_gap_closed_form(double r, double theta);

} // namespace epur
