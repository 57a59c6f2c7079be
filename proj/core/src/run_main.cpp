#include "nlkpp/run_main.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "nlkpp/csv_io.hpp"
#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/heat_compare.hpp"
#include "nlkpp/runner.hpp"

namespace nlkpp {

namespace {

std::string snapshot_path(const std::string& dir, double t) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return dir + "/u_t" + buf + ".csv";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw FileError("write failed for " + path);
}

void log_report(std::ostream& log, const CheckReport& r) {
    log << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name
        << "  worst_slack=" << format_g17(r.worst_slack) << " at t=" << r.location_t << "  ("
        << r.details << ")\n";
}

} // namespace

int run_main(const RunConfig& config, std::ostream& log) {
    const GridSpec grid = config.make_grid();
    const ScalarField u0 = build_field(config.ic, grid);

    auto snapshot_cb = [&](double t, const ScalarField& field) {
        write_snapshot_csv(field, snapshot_path(config.snapshot_dir, t));
    };

    const RunResult result = run_simulation(u0, config.params, config.snapshot_times,
                                            config.snapshot_times.empty() ? nullptr
                                                                          : SnapshotCallback(snapshot_cb));
    write_series_csv(result.series, config.series_path);

    if (result.min_dominance_margin <= 0.0)
        log << "[WARN] diagonal dominance margin reached " << result.min_dominance_margin
            << "; (tau/2) f' exceeded the operator somewhere\n";

    const BlowupVerdict verdict = detect_blowup(result);
    if (verdict.global)
        log << "status: Global (t = " << result.t_reached << ")\n";
    else
        log << "status: BlowupAt(t = " << verdict.t << ")\n";

    const double m0 = config.intended_m0();
    std::vector<CheckReport> reports;
    bool all_passed = true;
    for (const auto& req : config.checks) {
        CheckReport rep;
        if (req.name == "mass_bounds") {
            rep = check_mass_bounds(result.series, m0, req.tolerance);
        } else if (req.name == "mass_decay") {
            rep = check_mass_decay(result.series, m0, config.params.alpha, req.tolerance);
        } else if (req.name == "mass_ode") {
            rep = check_mass_ode_residual(result.series,
                                          std::max(req.tolerance, 10.0 * config.params.tau));
        } else if (req.name == "global_existence") {
            rep.check_name = "global_existence";
            rep.passed = verdict.global;
            rep.worst_slack = verdict.global ? 0.0 : -1.0;
            rep.location_t = verdict.t;
            rep.details = verdict.global ? "run reached t_final" : "aborted by blow-up detector";
        } else {
            throw ValidationError("unknown check '" + req.name + "'");
        }
        log_report(log, rep);
        all_passed = all_passed && rep.passed;
        reports.push_back(std::move(rep));
    }
    if (!config.report_path.empty()) write_text(config.report_path, reports_to_json(reports));

    if (!verdict.global) return 2;
    return all_passed ? 0 : 1;
}

int compare_heat_main(const RunConfig& config, std::ostream& log) {
    const GridSpec grid = config.make_grid();
    const ScalarField u0 = build_field(config.ic, grid);
    const double m0 = mass(u0);

    InitialConditionSpec ic_v;
    if (config.heat_ic) {
        ic_v = *config.heat_ic;
    } else {
        const double volume = grid.dim == 1 ? grid.b : grid.b * grid.b;
        ic_v = ConstantIc{m0 / volume};
    }

    const DecaySeries series = run_pair(config.ic, ic_v, grid, config.params);
    if (!config.decay_path.empty()) write_decay_csv(series, config.decay_path);

    const double t_a =
        config.fit_window_start >= 0.0 ? config.fit_window_start : config.params.t_final / 2.0;
    const double t_b =
        config.fit_window_start >= 0.0 ? config.fit_window_end : config.params.t_final;
    const ExponentialFit fit = fit_exponential(series, t_a, t_b);
    log << "decay fit over [" << t_a << ", " << t_b << "]: C1=" << format_g17(fit.c1)
        << " C2=" << format_g17(fit.c2) << " r2=" << format_g17(fit.r_squared) << "\n";
    log << "d(0)=" << format_g17(series.points.front().d)
        << "  d(T)=" << format_g17(series.points.back().d) << "\n";
    return 0;
}

double converge_main(const RunConfig& config, RefineAxis axis, std::ostream& log) {
    auto run_once = [&](double h, double tau) {
        RunConfig c = config;
        c.h = h;
        c.params.tau = tau;
        const GridSpec grid = c.make_grid();
        return run_simulation(build_field(c.ic, grid), c.params).final_field;
    };

    ScalarField coarse, medium, fine;
    if (axis == RefineAxis::Space) {
        coarse = run_once(config.h, config.params.tau);
        medium = run_once(config.h / 2.0, config.params.tau);
        fine = run_once(config.h / 4.0, config.params.tau);
    } else {
        coarse = run_once(config.h, config.params.tau);
        medium = run_once(config.h, config.params.tau / 2.0);
        fine = run_once(config.h, config.params.tau / 4.0);
    }
    const double p = estimate_order(coarse, medium, fine, axis);
    log << "estimated " << (axis == RefineAxis::Space ? "spatial" : "temporal")
        << " order: " << format_g17(p) << "\n";
    return p;
}

int check_main(const std::string& series_path, double m0, double alpha, double bounds_tol,
               double decay_slack, const std::string& report_path, std::ostream& log) {
    const MassSeries series = read_series_csv(series_path);
    std::vector<CheckReport> reports;
    reports.push_back(check_mass_bounds(series, m0, bounds_tol));
    reports.push_back(check_mass_decay(series, m0, alpha, decay_slack));
    reports.push_back(check_mass_ode_residual(series, 1e-2));
    bool all_passed = true;
    for (const auto& r : reports) {
        log_report(log, r);
        all_passed = all_passed && r.passed;
    }
    if (!report_path.empty()) write_text(report_path, reports_to_json(reports));
    return all_passed ? 0 : 1;
}

} // namespace nlkpp
