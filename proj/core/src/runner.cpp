#include "nlkpp/runner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlkpp/adi2d.hpp"
#include "nlkpp/errors.hpp"
#include "nlkpp/solver1d.hpp"

namespace nlkpp {

namespace {

// Event times the trajectory must land on exactly, in increasing order.
std::vector<double> collect_events(const SimParams& p, const std::vector<double>& snapshots) {
    std::vector<double> events;
    for (double s : snapshots)
        if (s > 0.0 && s <= p.t_final) events.push_back(s);
    if (p.tau_init > 0.0 && p.tau_switch < p.t_final) events.push_back(p.tau_switch);
    events.push_back(p.t_final);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    return events;
}

} // namespace

RunResult run_simulation(const ScalarField& u0, const SimParams& params,
                         const std::vector<double>& snapshot_times,
                         const SnapshotCallback& on_snapshot) {
    params.validate();
    if (!u0.finite()) throw ValidationError("initial field has non-finite entries");

    const bool two_d = u0.dim() == 2;
    RunResult result;
    result.min_dominance_margin = std::numeric_limits<double>::infinity();
    result.series.lk_order = params.effective_lk_order();
    result.series.append(sample_record(0.0, u0, params));
    result.any_negativity = u0.min_value() < 0.0;

    if (on_snapshot)
        for (double s : snapshot_times)
            if (s == 0.0) on_snapshot(0.0, u0);

    const std::vector<double> events = collect_events(params, snapshot_times);
    std::size_t next_event = 0;

    ScalarField field = u0;
    Cn1dState state;
    if (!two_d) state = make_cn1d_state(field);

    double t = 0.0;
    std::size_t step_count = 0;
    double last_recorded_t = 0.0;

    while (t < params.t_final) {
        const double tau_now =
            (params.tau_init > 0.0 && t < params.tau_switch) ? params.tau_init : params.tau;
        while (next_event < events.size() && events[next_event] <= t) ++next_event;
        const double target = events[next_event]; // t_final is always last
        double dt;
        double t_next;
        if (target - t <= tau_now * (1.0 + 1e-9)) {
            dt = target - t;
            t_next = target;
        } else {
            dt = tau_now;
            t_next = t + dt;
        }

        try {
            if (two_d) {
                AdiStepReport rep = adi_step(field, params, dt);
                field = std::move(rep.new_field);
                result.min_dominance_margin =
                    std::min(result.min_dominance_margin, rep.dominance_margin);
                result.any_negativity = result.any_negativity || rep.negativity_flag;
            } else {
                double margin = std::numeric_limits<double>::infinity();
                state = cn1d_step(state, params, dt, &margin);
                result.min_dominance_margin = std::min(result.min_dominance_margin, margin);
                result.any_negativity =
                    result.any_negativity || state.field.min_value() < 0.0;
                field = state.field;
            }
        } catch (const BlowupDetected&) {
            result.status = RunStatus::Blowup;
            result.blowup_t = t_next;
            result.t_reached = t;
            result.final_field = std::move(field);
            return result;
        }

        t = t_next;
        ++step_count;

        if (on_snapshot && t_next == target && target != params.t_final)
            for (double s : snapshot_times)
                if (s == target) on_snapshot(t, field);

        const bool due = step_count % params.record_every == 0;
        const bool final_step = t >= params.t_final;
        if ((due || final_step) && t > last_recorded_t) {
            result.series.append(sample_record(t, field, params));
            last_recorded_t = t;
        }
        if (final_step && on_snapshot)
            for (double s : snapshot_times)
                if (s == params.t_final) on_snapshot(t, field);
    }

    result.status = RunStatus::Global;
    result.t_reached = t;
    result.final_field = std::move(field);
    return result;
}

} // namespace nlkpp
