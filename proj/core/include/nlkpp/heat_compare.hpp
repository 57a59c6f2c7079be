#pragma once

#include <vector>

#include "nlkpp/field.hpp"
#include "nlkpp/grid.hpp"
#include "nlkpp/initial_condition.hpp"
#include "nlkpp/params.hpp"

namespace nlkpp {

/// d(t) = || u(t) - v(t) - (1 - m0) ||_{L^2}, the deviation of the reacting
/// solution from the heat solution shifted by the asymptotic mass gap.
struct DecayPoint {
    double t = 0.0;
    double d = 0.0;
};

struct DecaySeries {
    std::vector<DecayPoint> points;
};

double decay_metric(const ScalarField& u, const ScalarField& v, double m0);

/// Advances u (in params.mode) and v (heat mode, same grid and steps) side by
/// side and records d(t) at t=0, every record_every steps, and t_final.
/// Initial masses must agree within 1e-6 or MassMismatch is thrown; m0 is the
/// discrete initial mass of u.
DecaySeries run_pair(const InitialConditionSpec& ic_u, const InitialConditionSpec& ic_v,
                     const GridSpec& grid, const SimParams& params);

struct ExponentialFit {
    double c1 = 0.0;        // exp(intercept)
    double c2 = 0.0;        // -slope
    double r_squared = 0.0; // 1 means perfectly log-linear
};

/// Least-squares line fit of log d against t over [t_a, t_b]. Values are
/// floored at 1e-15 before the log. Throws InsufficientData with fewer than
/// 5 samples in the window. A series with zero log-variance fits exactly
/// (c2 = 0, r_squared = 1).
ExponentialFit fit_exponential(const DecaySeries& series, double t_a, double t_b);

} // namespace nlkpp
