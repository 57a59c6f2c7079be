#include "nlkpp/theory_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "nlkpp/errors.hpp"

namespace nlkpp {

namespace {

std::string brief(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

CheckReport check_mass_bounds(const MassSeries& series, double m0, double tol) {
    if (series.empty()) throw EmptySeries("check_mass_bounds: empty series");
    const double lo = std::min(1.0, m0);
    const double hi = std::max(1.0, m0);

    CheckReport report;
    report.check_name = "mass_bounds";
    report.worst_slack = std::numeric_limits<double>::infinity();
    for (const auto& rec : series.records) {
        const double slack = std::min(rec.mass - lo, hi - rec.mass);
        if (slack < report.worst_slack) {
            report.worst_slack = slack;
            report.location_t = rec.t;
        }
    }
    report.passed = report.worst_slack >= -tol;
    report.details = "min{1,m0}=" + brief(lo) + " max{1,m0}=" + brief(hi) + " tol=" + brief(tol) +
                     " |m(0)-m0|=" + brief(std::abs(series.front().mass - m0));
    return report;
}

CheckReport check_mass_decay(const MassSeries& series, double m0, double alpha,
                             double slack_factor) {
    if (series.empty()) throw EmptySeries("check_mass_decay: empty series");
    const double rate = std::min(1.0, std::pow(m0, alpha));
    const double gap0 = std::abs(1.0 - m0);

    CheckReport report;
    report.check_name = "mass_decay";
    report.worst_slack = std::numeric_limits<double>::infinity();
    for (const auto& rec : series.records) {
        const double envelope = slack_factor * gap0 * std::exp(-rate * rec.t);
        const double slack = envelope - std::abs(1.0 - rec.mass);
        if (slack < report.worst_slack) {
            report.worst_slack = slack;
            report.location_t = rec.t;
        }
    }
    report.passed = report.worst_slack >= 0.0;
    report.details = "rate=min{1,m0^alpha}=" + brief(rate) +
                     " slack_factor=" + brief(slack_factor) + " m0=" + brief(m0);
    return report;
}

CheckReport check_mass_ode_residual(const MassSeries& series, double tol) {
    if (series.empty()) throw EmptySeries("check_mass_ode_residual: empty series");
    CheckReport report;
    report.check_name = "mass_ode";
    if (series.size() < 3) {
        report.passed = true;
        report.worst_slack = 0.0;
        report.details = "fewer than 3 records; residual check vacuous";
        return report;
    }
    report.worst_slack = std::numeric_limits<double>::infinity();
    const auto& recs = series.records;
    for (std::size_t i = 1; i + 1 < recs.size(); ++i) {
        const double dm = (recs[i + 1].mass - recs[i - 1].mass) / (recs[i + 1].t - recs[i - 1].t);
        const double rhs = (1.0 - recs[i].mass) * recs[i].int_u_alpha;
        const double slack = tol - std::abs(dm - rhs);
        if (slack < report.worst_slack) {
            report.worst_slack = slack;
            report.location_t = recs[i].t;
        }
    }
    report.passed = report.worst_slack >= 0.0;
    report.details = "central-difference m' vs (1-m) int u^alpha, tol=" + brief(tol);
    return report;
}

CheckReport check_mass_monotone(const MassSeries& series, int direction, double per_step_slack,
                                std::size_t steps_per_record, double stop_gap) {
    if (series.empty()) throw EmptySeries("check_mass_monotone: empty series");
    CheckReport report;
    report.check_name = direction > 0 ? "mass_nondecreasing" : "mass_nonincreasing";
    report.worst_slack = std::numeric_limits<double>::infinity();
    const double slack_total = per_step_slack * static_cast<double>(steps_per_record);
    const auto& recs = series.records;
    bool any = false;
    for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
        if (stop_gap > 0.0 && std::abs(1.0 - recs[i].mass) < stop_gap) break;
        any = true;
        const double delta = (recs[i + 1].mass - recs[i].mass) * static_cast<double>(direction);
        const double slack = delta + slack_total;
        if (slack < report.worst_slack) {
            report.worst_slack = slack;
            report.location_t = recs[i + 1].t;
        }
    }
    if (!any) report.worst_slack = 0.0;
    report.passed = report.worst_slack >= 0.0;
    report.details = std::string("direction=") + (direction > 0 ? "+" : "-") +
                     " per_step_slack=" + brief(per_step_slack);
    return report;
}

BlowupVerdict detect_blowup(const RunResult& run) {
    BlowupVerdict verdict;
    verdict.global = run.status == RunStatus::Global;
    verdict.t = run.blowup_t;
    return verdict;
}

namespace {

ScalarField restrict_to(const ScalarField& fine, std::size_t factor, const GridSpec& coarse_grid) {
    ScalarField out(coarse_grid);
    const std::size_t n = coarse_grid.n;
    if (coarse_grid.dim == 1) {
        for (std::size_t i = 0; i < n; ++i) out.at(i) = fine.at(i * factor);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) = fine.at(i * factor, j * factor);
    }
    return out;
}

} // namespace

double estimate_order(const ScalarField& coarse, const ScalarField& medium,
                      const ScalarField& fine, RefineAxis axis) {
    const GridSpec& gc = coarse.grid();
    const GridSpec& gm = medium.grid();
    const GridSpec& gf = fine.grid();
    if (gc.dim != gm.dim || gm.dim != gf.dim)
        throw MisalignedRuns("estimate_order: dimension mismatch");
    if (std::abs(gc.b - gm.b) > 1e-12 || std::abs(gm.b - gf.b) > 1e-12)
        throw MisalignedRuns("estimate_order: domain mismatch");

    double diff_cm, diff_mf;
    if (axis == RefineAxis::Space) {
        if (gm.n - 1 != 2 * (gc.n - 1) || gf.n - 1 != 4 * (gc.n - 1))
            throw MisalignedRuns("estimate_order: grids do not refine by factor 2");
        diff_cm = max_abs_diff(coarse, restrict_to(medium, 2, gc));
        diff_mf = max_abs_diff(restrict_to(medium, 2, gc), restrict_to(fine, 4, gc));
    } else {
        if (gc != gm || gm != gf)
            throw MisalignedRuns("estimate_order: time refinement requires a common grid");
        diff_cm = max_abs_diff(coarse, medium);
        diff_mf = max_abs_diff(medium, fine);
    }
    if (diff_cm == 0.0 || diff_mf == 0.0)
        throw MisalignedRuns("estimate_order: identical runs do not form a ladder");
    return std::log2(diff_cm / diff_mf);
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back({{"check_name", r.check_name},
                       {"passed", r.passed},
                       {"worst_slack", r.worst_slack},
                       {"location_t", r.location_t},
                       {"details", r.details}});
    }
    return arr.dump(2) + "\n";
}

} // namespace nlkpp
