#pragma once

#include <iosfwd>
#include <string>

#include "nlkpp/config.hpp"
#include "nlkpp/theory_checks.hpp"

namespace nlkpp {

/// Executes a configured run: solver loop, series.csv, snapshots, checks,
/// report.json. Returns the process exit status: 0 when the run completed
/// and every configured check passed, 2 on blow-up, 1 otherwise.
int run_main(const RunConfig& config, std::ostream& log);

/// Runs the nonlocal/heat pair, writes decay.csv, fits the exponential over
/// the configured window (default [T/2, T]) and logs C1, C2, r^2.
int compare_heat_main(const RunConfig& config, std::ostream& log);

/// Three runs refined by factor 2 along the given axis; logs and returns the
/// Richardson order estimate.
double converge_main(const RunConfig& config, RefineAxis axis, std::ostream& log);

/// Re-checks an existing series.csv against the mass laws.
int check_main(const std::string& series_path, double m0, double alpha, double bounds_tol,
               double decay_slack, const std::string& report_path, std::ostream& log);

} // namespace nlkpp
