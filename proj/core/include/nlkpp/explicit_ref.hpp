#pragma once

#include "nlkpp/field.hpp"
#include "nlkpp/params.hpp"

namespace nlkpp {

/// Forward-Euler micro-stepper used only as a brute-force oracle on small
/// grids and short horizons.
struct ExplicitParams {
    double tau_ref = 1e-6;
    bool cfl_guard = true; // enforce tau_ref <= h^2 / (4 dim)
};

/// u^{k+1} = u^k + tau_ref (dxx + dyy) u^k + tau_ref f(u^k) at interior
/// nodes; boundaries via the same one-sided extrapolations as the implicit
/// steppers. Throws CflViolation when the guard is on and violated.
ScalarField explicit_step(const ScalarField& u, const SimParams& params,
                          const ExplicitParams& ep);

/// Marches explicit_step from u to t_end (the last micro-step is truncated
/// to land exactly on t_end). Oracle convenience for tests.
ScalarField explicit_run(const ScalarField& u0, const SimParams& params,
                         const ExplicitParams& ep, double t_end);

} // namespace nlkpp
