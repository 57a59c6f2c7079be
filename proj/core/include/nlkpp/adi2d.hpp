#pragma once

#include "nlkpp/field.hpp"
#include "nlkpp/params.hpp"
#include "nlkpp/reaction.hpp"
#include "nlkpp/tridiagonal.hpp"

namespace nlkpp {

/// Diagnostics from one ADI step.
struct AdiStepReport {
    ScalarField new_field;
    double mass_after = 0.0;
    double max_after = 0.0;
    // min over all assembled line equations of |diag| - |lower| - |upper|;
    // <= 0 means (tau/2) f' overwhelmed the operator somewhere.
    double dominance_margin = 0.0;
    bool negativity_flag = false;
};

/// Assembles one ghost-eliminated sweep line with M = N-2 interior unknowns.
/// r = tau/(2 h^2). fprime_line may be empty (y sweep / heat mode); otherwise
/// it holds f'(u^k) at the interior nodes of the line. The extrapolation
/// closures are folded into the first/last equations, which keeps the system
/// strictly tridiagonal.
void assemble_sweep_line(std::span<const double> rhs_interior,
                         std::span<const double> fprime_line, double r, double tau,
                         TridiagonalSystem& out);

/// Right-hand side h(u^k) of the factored scheme at interior nodes:
///   h = [1 - (tau/2) f'] u + tau f + (tau/2) dxx u
///     + [(tau^2/4) dxx + (tau^2/4) f' + tau/2] dyy u.
/// Boundary entries of the returned field copy u (they are never read by the
/// sweeps). Boundary values of u itself come from the previous level's
/// closure (or the initial condition).
ScalarField compute_rhs_h(const ScalarField& u, const ReactionEval& reaction, double tau);

/// First split equation: solves [1 - (tau/2) dxx - (tau/2) f'] ubar = h along
/// each interior row, then materializes the x-boundary values from the
/// extrapolation relations and closes the remaining edges so the field is
/// fully populated. min_margin, when non-null, accumulates the dominance
/// margin of every assembled equation.
ScalarField sweep_x(const ScalarField& h_field, const ScalarField& fprime, double tau,
                    double* min_margin = nullptr);

/// Second split equation: solves [1 - (tau/2) dyy] u = ubar along each
/// interior column, then fills edges and corners by extrapolation.
ScalarField sweep_y(const ScalarField& ubar, double tau, double* min_margin = nullptr);

/// One full time step of the linearized ADI scheme:
/// eval_reaction -> compute_rhs_h -> sweep_x -> sweep_y. Heat mode skips the
/// reaction (f = f' = 0). Throws BlowupDetected if the result exceeds
/// params.blowup_threshold or goes non-finite; ZeroPivot propagates from the
/// line solves. tau_override > 0 substitutes for params.tau (used by the run
/// loop when truncating a step onto an event time).
AdiStepReport adi_step(const ScalarField& u, const SimParams& params,
                       double tau_override = 0.0);

} // namespace nlkpp
