#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "amp/dressed.hpp"
#include "amp/mirror.hpp"
#include "amp/optimize.hpp"
#include "amp/qcore.hpp"
#include "amp/threelevel.hpp"

namespace amp {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimal TOML reader covering the run-config schema: [dotted.sections],
// `key = value` with strings, numbers, booleans and flat arrays, and #
// comments. Returns the equivalent JSON tree; errors carry file:line.
nlohmann::json parse_toml_subset(std::istream& in, const std::string& filename);

// Dispatches on extension: .json parses as JSON, anything else as the TOML
// subset.
nlohmann::json load_config_file(const std::filesystem::path& path);

// A validated run description. `raw` keeps the normalized parameter tree;
// sweep axes mutate copies of it through parameter paths such as
// "drive.Omega_d_over_Gamma21" or "atom.omega10_ghz".
struct RunConfig {
    nlohmann::json raw;
    Scheme scheme = Scheme::ThreeLevelPumped;
    Geometry geometry = Geometry::MirrorTerminated;
    std::optional<SweepSpec> sweep;
    std::string objective = "abs_reflection";
    std::optional<std::string> output_path;
};

RunConfig run_config_from_json(const nlohmann::json& doc, const std::string& origin);
RunConfig load_run_config(const std::filesystem::path& path);

// Fully resolved single evaluation point (all angular frequencies in rad/s).
struct ResolvedPoint {
    AtomParams atom;
    double Omega_d = 0.0;
    double Omega_p = 0.0;        // pumped-scheme probe amplitude (oracle use)
    double dw10 = 0.0;           // pumped: omega10 - omega_p
    double dw20 = 0.0;           // pumped: omega20 - omega_d
    double d10 = 0.0, d20 = 0.0; // dressed frame detunings
    double delta = 0.0;          // dressed: omega_p - omega_d
    double omega_d = 0.0;        // absolute drive frequency when given
    CoherencePath path = CoherencePath::Full;
};

// Applies one sweep coordinate to the raw tree (erasing sibling spellings of
// the same quantity), then resolves. atom.* paths are applied before
// drive/probe paths so ratio spellings see updated rates.
void apply_parameter(nlohmann::json& raw, const std::string& path, double value);

ResolvedPoint resolve_point(const RunConfig& cfg, const nlohmann::json& raw);
inline ResolvedPoint resolve_point(const RunConfig& cfg) { return resolve_point(cfg, cfg.raw); }

// Objective value at one resolved point ("abs_reflection", "gain_percent",
// "branch_gain:<mu>,<nu>"); throws ConfigError on objective/scheme mismatch.
double evaluate_objective(const RunConfig& cfg, const ResolvedPoint& pt);
double evaluate_objective(const RunConfig& cfg);

// Binds the sweep axes of cfg to an Objective for run_sweep/refine_max.
Objective bind_objective(const RunConfig& cfg);

struct SweepOutcome {
    SweepResult grid;
    RefineResult refined;
};

SweepOutcome run_config_sweep(const RunConfig& cfg);

}  // namespace amp
