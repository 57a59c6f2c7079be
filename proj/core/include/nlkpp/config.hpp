#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlkpp/grid.hpp"
#include "nlkpp/initial_condition.hpp"
#include "nlkpp/params.hpp"

namespace nlkpp {

/// One requested theory check with its tolerance knob.
struct CheckRequest {
    std::string name;    // mass_bounds | mass_decay | mass_ode | global_existence
    double tolerance = 0.0; // tol for bounds/ode, slack_factor for decay
    bool operator==(const CheckRequest&) const = default;
};

/// A fully validated run description: everything run_main needs.
struct RunConfig {
    int dim = 2;
    double b = 1.0;
    double h = 0.0;
    SimParams params;
    InitialConditionSpec ic = ConstantIc{0.0};
    std::optional<InitialConditionSpec> heat_ic; // compare-heat partner; default constant of equal mass

    std::string series_path = "series.csv";
    std::string snapshot_dir = ".";
    std::vector<double> snapshot_times;
    std::string report_path = "report.json";
    std::string decay_path = "decay.csv";
    double fit_window_start = -1.0; // < 0 -> default [T/2, T]
    double fit_window_end = -1.0;

    std::vector<CheckRequest> checks;

    bool operator==(const RunConfig&) const = default;

    GridSpec make_grid() const;
    /// Intended initial mass: closed form when the IC has one, otherwise the
    /// discrete mass of the built field.
    double intended_m0() const;
};

/// Parses the line-oriented `key = value` format (# comments, dotted keys).
/// Unknown keys and duplicated keys are errors (ParseError names the line);
/// range violations throw ValidationError.
RunConfig parse_config(const std::string& text);

/// Canonical config text; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

/// Applies one `key=value` override on top of an existing config.
void apply_override(RunConfig& config, const std::string& key_value);

/// Applies several overrides, validating once at the end (so ordering
/// between interdependent keys does not matter).
void apply_overrides(RunConfig& config, const std::vector<std::string>& key_values);

/// The preset catalogue transcribed from the three experiment cases
/// (case1, case1b, case2, case3). Throws UnknownPreset.
RunConfig preset(const std::string& name);

std::vector<std::string> preset_names();

} // namespace nlkpp
