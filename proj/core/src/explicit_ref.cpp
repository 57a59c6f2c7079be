#include "nlkpp/explicit_ref.hpp"

#include <cmath>
#include <string>

#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/reaction.hpp"
#include "nlkpp/stencil.hpp"

namespace nlkpp {

ScalarField explicit_step(const ScalarField& u, const SimParams& params,
                          const ExplicitParams& ep) {
    if (u.n() < 4) throw ValidationError("explicit_step requires N >= 4 per axis");
    const double h = u.grid().h;
    if (ep.cfl_guard && ep.tau_ref > h * h / (4.0 * u.dim()))
        throw CflViolation("tau_ref " + std::to_string(ep.tau_ref) + " exceeds h^2/(4 dim)");
    const double inv_h2 = 1.0 / (h * h);
    const std::size_t n = u.n();

    ReactionEval reaction;
    const bool react = params.mode == SolverMode::NonlocalKpp;
    if (react) reaction = eval_reaction(u, params.alpha);

    ScalarField out = u;
    if (u.dim() == 1) {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double lap = (u.at(i + 1) - 2.0 * u.at(i) + u.at(i - 1)) * inv_h2;
            out.at(i) = u.at(i) + ep.tau_ref * (lap + (react ? reaction.f.at(i) : 0.0));
        }
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            for (std::size_t j = 1; j + 1 < n; ++j) {
                const double lap = (u.at(i + 1, j) - 2.0 * u.at(i, j) + u.at(i - 1, j) +
                                    u.at(i, j + 1) - 2.0 * u.at(i, j) + u.at(i, j - 1)) *
                                   inv_h2;
                out.at(i, j) =
                    u.at(i, j) + ep.tau_ref * (lap + (react ? reaction.f.at(i, j) : 0.0));
            }
        }
    }
    apply_boundary_closure(out);

    if (!out.finite()) throw BlowupDetected("explicit step produced non-finite values", 0.0);
    if (linf(out) > params.blowup_threshold)
        throw BlowupDetected("explicit step exceeded blow-up threshold", 0.0);
    return out;
}

ScalarField explicit_run(const ScalarField& u0, const SimParams& params,
                         const ExplicitParams& ep, double t_end) {
    ScalarField u = u0;
    double t = 0.0;
    while (t < t_end) {
        ExplicitParams step_ep = ep;
        if (t_end - t < ep.tau_ref * (1.0 + 1e-12)) {
            step_ep.tau_ref = t_end - t;
            t = t_end;
        } else {
            t += ep.tau_ref;
        }
        u = explicit_step(u, params, step_ep);
    }
    return u;
}

} // namespace nlkpp
