#include "nlkpp/heat_compare.hpp"

#include <cmath>
#include <string>

#include "nlkpp/adi2d.hpp"
#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/solver1d.hpp"

namespace nlkpp {

double decay_metric(const ScalarField& u, const ScalarField& v, double m0) {
    if (u.grid() != v.grid())
        throw ValidationError("decay_metric: fields live on different grids");
    ScalarField w = u;
    const double shift = 1.0 - m0;
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = u[k] - v[k] - shift;
    return lk_norm(w, 2.0);
}

DecaySeries run_pair(const InitialConditionSpec& ic_u, const InitialConditionSpec& ic_v,
                     const GridSpec& grid, const SimParams& params) {
    params.validate();
    ScalarField u = build_field(ic_u, grid);
    ScalarField v = build_field(ic_v, grid);
    const double m0 = mass(u);
    const double mv = mass(v);
    if (std::abs(m0 - mv) > 1e-6)
        throw MassMismatch("initial masses differ: " + std::to_string(m0) + " vs " +
                           std::to_string(mv));

    SimParams heat_params = params;
    heat_params.mode = SolverMode::Heat;

    DecaySeries series;
    series.points.push_back({0.0, decay_metric(u, v, m0)});

    const bool two_d = grid.dim == 2;
    Cn1dState su, sv;
    if (!two_d) {
        su = make_cn1d_state(u);
        sv = make_cn1d_state(v);
    }

    double t = 0.0;
    std::size_t step_count = 0;
    while (t < params.t_final) {
        double dt;
        if (params.t_final - t <= params.tau * (1.0 + 1e-9)) {
            dt = params.t_final - t;
            t = params.t_final;
        } else {
            dt = params.tau;
            t += dt;
        }
        if (two_d) {
            u = adi_step(u, params, dt).new_field;
            v = adi_step(v, heat_params, dt).new_field;
        } else {
            su = cn1d_step(su, params, dt);
            sv = cn1d_step(sv, heat_params, dt);
            u = su.field;
            v = sv.field;
        }
        ++step_count;
        if (step_count % params.record_every == 0 || t >= params.t_final)
            if (series.points.back().t < t)
                series.points.push_back({t, decay_metric(u, v, m0)});
    }
    return series;
}

ExponentialFit fit_exponential(const DecaySeries& series, double t_a, double t_b) {
    constexpr double kFloor = 1e-15;
    std::vector<double> ts, ys;
    for (const auto& p : series.points) {
        if (p.t < t_a || p.t > t_b) continue;
        ts.push_back(p.t);
        ys.push_back(std::log(std::max(p.d, kFloor)));
    }
    if (ts.size() < 5)
        throw InsufficientData("fit window holds " + std::to_string(ts.size()) +
                               " samples; need at least 5");

    const std::size_t n = ts.size();
    double t_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        t_mean += ts[i];
        y_mean += ys[i];
    }
    t_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double stt = 0.0, sty = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = ts[i] - t_mean;
        const double dy = ys[i] - y_mean;
        stt += dt * dt;
        sty += dt * dy;
        syy += dy * dy;
    }
    const double slope = sty / stt;
    const double intercept = y_mean - slope * t_mean;

    ExponentialFit fit;
    fit.c1 = std::exp(intercept);
    fit.c2 = -slope;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = ys[i] - (intercept + slope * ts[i]);
        ss_res += resid * resid;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

} // namespace nlkpp
