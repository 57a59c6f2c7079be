#pragma once

#include <string>
#include <vector>

#include "nlkpp/field.hpp"
#include "nlkpp/runner.hpp"
#include "nlkpp/series.hpp"

namespace nlkpp {

/// Verdict of one theory check. worst_slack is the signed margin by which
/// the bound held (>= 0) or failed (< 0); passed <=> worst_slack >= -tol for
/// the check's named tolerance.
struct CheckReport {
    std::string check_name;
    bool passed = false;
    double worst_slack = 0.0;
    double location_t = 0.0; // time of the worst margin
    std::string details;
};

/// min{1, m0} - tol <= m(t) <= max{1, m0} + tol over the whole series.
/// m0 is the intended initial mass (from the config, not the discrete
/// field); the discrepancy against the recorded mass at t=0 goes into
/// details.
CheckReport check_mass_bounds(const MassSeries& series, double m0, double tol);

/// |1 - m(t)| <= slack_factor * |1 - m0| * exp(-min{1, m0^alpha} t).
/// worst_slack is the minimum of envelope - |1-m| over the records.
CheckReport check_mass_decay(const MassSeries& series, double m0, double alpha,
                             double slack_factor = 1.1);

/// Central-difference m'(t) against (1 - m) * int u^alpha at interior record
/// times; passes when they agree within tol everywhere.
CheckReport check_mass_ode_residual(const MassSeries& series, double tol);

/// Monotone mass: nondecreasing (direction=+1) or nonincreasing (-1), with
/// per-step slack scaled by the number of steps between records. Records
/// after |1 - m| < stop_gap are exempt (the tail jitters at roundoff scale).
CheckReport check_mass_monotone(const MassSeries& series, int direction,
                                double per_step_slack, std::size_t steps_per_record,
                                double stop_gap = 0.0);

struct BlowupVerdict {
    bool global = true;
    double t = 0.0; // first offending time when !global
};

/// Global if the run reached t_final with all records finite and below the
/// threshold; BlowupAt(t) otherwise.
BlowupVerdict detect_blowup(const RunResult& run);

/// Richardson self-convergence order from three runs refined by a factor of
/// 2 along one axis. Space refinement compares on the coarse node set (the
/// grids must nest); time refinement requires identical grids. Throws
/// MisalignedRuns otherwise.
enum class RefineAxis { Space, Time };
double estimate_order(const ScalarField& coarse, const ScalarField& medium,
                      const ScalarField& fine, RefineAxis axis);

/// Serializes reports as a JSON array with stable field names
/// (check_name, passed, worst_slack, location_t, details).
std::string reports_to_json(const std::vector<CheckReport>& reports);

} // namespace nlkpp
