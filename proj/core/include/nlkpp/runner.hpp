#pragma once

#include <functional>
#include <vector>

#include "nlkpp/field.hpp"
#include "nlkpp/params.hpp"
#include "nlkpp/series.hpp"

namespace nlkpp {

enum class RunStatus {
    Global, // reached t_final with all records finite and below threshold
    Blowup, // aborted; blowup_t holds the first offending time
};

struct RunResult {
    MassSeries series;
    ScalarField final_field;
    RunStatus status = RunStatus::Global;
    double t_reached = 0.0;
    double blowup_t = 0.0;
    double min_dominance_margin = 0.0;
    bool any_negativity = false;
};

/// Called whenever the run lands exactly on a requested snapshot time.
using SnapshotCallback = std::function<void(double t, const ScalarField& field)>;

/// Advances u0 to params.t_final with the ADI stepper (2D) or the linearized
/// CN stepper (1D). Steps are truncated so the trajectory lands exactly on
/// the tau_init->tau switch time, every snapshot time, and t_final. Records
/// are taken at t=0, every record_every steps, and at t_final. BlowupDetected
/// ends the run with status Blowup (reported, not a crash); ZeroPivot and
/// other errors propagate.
RunResult run_simulation(const ScalarField& u0, const SimParams& params,
                         const std::vector<double>& snapshot_times = {},
                         const SnapshotCallback& on_snapshot = nullptr);

} // namespace nlkpp
