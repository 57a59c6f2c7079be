#pragma once

#include "nlkpp/field.hpp"
#include "nlkpp/params.hpp"

namespace nlkpp {

/// 1D solution state: field plus its trapezoid mass.
struct Cn1dState {
    ScalarField field;
    double mass = 0.0;
};

Cn1dState make_cn1d_state(ScalarField field);

/// One step of the linearized Crank-Nicolson scheme (the 1D analogue of the
/// 2D factored step; no splitting is needed in one dimension):
///   [1 - (tau/2) dxx - (tau/2) f'] u^{k+1}
///     = [1 + (tau/2) dxx] u^k + tau f - (tau/2) f' u^k,
/// one ghost-eliminated tridiagonal solve, boundaries closed by one-sided
/// extrapolation. Errors as adi_step. min_margin as in the 2D sweeps.
Cn1dState cn1d_step(const Cn1dState& state, const SimParams& params,
                    double tau_override = 0.0, double* min_margin = nullptr);

} // namespace nlkpp
