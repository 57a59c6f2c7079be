#include "nlkpp/solver1d.hpp"

#include <limits>
#include <vector>

#include "nlkpp/adi2d.hpp"
#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/reaction.hpp"
#include "nlkpp/stencil.hpp"
#include "nlkpp/tridiagonal.hpp"

namespace nlkpp {

Cn1dState make_cn1d_state(ScalarField field) {
    Cn1dState state;
    state.mass = mass(field);
    state.field = std::move(field);
    return state;
}

Cn1dState cn1d_step(const Cn1dState& state, const SimParams& params, double tau_override,
                    double* min_margin) {
    const ScalarField& u = state.field;
    if (u.dim() != 1) throw ValidationError("cn1d_step requires a 1D field");
    if (u.n() < 4) throw ValidationError("cn1d_step requires N >= 4");
    if (!u.finite()) throw BlowupDetected("input field has non-finite entries", 0.0);
    const double tau = tau_override > 0.0 ? tau_override : params.tau;
    const std::size_t n = u.n();
    const std::size_t m = n - 2;
    const double inv_h2 = 1.0 / (u.grid().h * u.grid().h);
    const double r = 0.5 * tau * inv_h2;

    ReactionEval reaction;
    if (params.mode == SolverMode::NonlocalKpp) {
        if (u.min_value() < -1e-8)
            throw NegativePower("field below -1e-8 entering a kpp step");
        reaction = eval_reaction(u, params.alpha);
    } else {
        reaction.f = ScalarField(u.grid());
        reaction.fprime = ScalarField(u.grid());
        reaction.mass_k = state.mass;
    }

    std::vector<double> rhs(m), fp_line(m), x(m), scratch(m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = k + 1;
        const double dxx = (u.at(i + 1) - 2.0 * u.at(i) + u.at(i - 1)) * inv_h2;
        const double fp = reaction.fprime.at(i);
        rhs[k] = u.at(i) + 0.5 * tau * dxx + tau * reaction.f.at(i) - 0.5 * tau * fp * u.at(i);
        fp_line[k] = fp;
    }

    TridiagonalSystem sys;
    assemble_sweep_line(rhs, fp_line, r, tau, sys);
    if (min_margin) {
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < m; ++k) {
            double off = 0.0;
            if (k > 0) off += std::abs(sys.lower[k - 1]);
            if (k + 1 < m) off += std::abs(sys.upper[k]);
            margin = std::min(margin, std::abs(sys.diag[k]) - off);
        }
        *min_margin = std::min(*min_margin, margin);
    }
    thomas_solve_into(sys.lower, sys.diag, sys.upper, sys.rhs, x, scratch);

    ScalarField unew(u.grid());
    for (std::size_t k = 0; k < m; ++k) unew.at(k + 1) = x[k];
    apply_boundary_closure(unew);

    if (!unew.finite()) throw BlowupDetected("step produced non-finite values", 0.0);
    Cn1dState next = make_cn1d_state(std::move(unew));
    if (linf(next.field) > params.blowup_threshold)
        throw BlowupDetected("max norm exceeded blow-up threshold", 0.0);
    return next;
}

} // namespace nlkpp
