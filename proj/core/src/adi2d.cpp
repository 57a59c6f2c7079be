#include "nlkpp/adi2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/stencil.hpp"

namespace nlkpp {

namespace {

constexpr double kNegativityFloor = -1e-8;

void require_steppable(const ScalarField& u, int dim) {
    if (u.dim() != dim)
        throw ValidationError("stepper dimension mismatch");
    if (u.n() < 4)
        throw ValidationError("stepper requires N >= 4 per axis");
}

double line_margin(const TridiagonalSystem& sys) {
    const std::size_t m = sys.diag.size();
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) {
        double off = 0.0;
        if (k > 0) off += std::abs(sys.lower[k - 1]);
        if (k + 1 < m) off += std::abs(sys.upper[k]);
        margin = std::min(margin, std::abs(sys.diag[k]) - off);
    }
    return margin;
}

void track_margin(double* min_margin, const TridiagonalSystem& sys) {
    if (min_margin) *min_margin = std::min(*min_margin, line_margin(sys));
}

} // namespace

void assemble_sweep_line(std::span<const double> rhs_interior,
                         std::span<const double> fprime_line, double r, double tau,
                         TridiagonalSystem& out) {
    const std::size_t m = rhs_interior.size();
    if (m < 2) throw ValidationError("sweep line needs at least 2 interior nodes");
    out.lower.assign(m - 1, -r);
    out.upper.assign(m - 1, -r);
    out.diag.assign(m, 1.0 + 2.0 * r);
    out.rhs.assign(rhs_interior.begin(), rhs_interior.end());

    // Ghost elimination: substituting u_0 = (4u_1 - u_2)/3 into the first
    // interior stencil turns (u_0 - 2u_1 + u_2) into (2/3)(u_2 - u_1); same
    // at the far end.
    out.diag.front() = 1.0 + (2.0 / 3.0) * r;
    out.diag.back() = 1.0 + (2.0 / 3.0) * r;
    out.upper.front() = -(2.0 / 3.0) * r;
    out.lower.back() = -(2.0 / 3.0) * r;

    if (!fprime_line.empty())
        for (std::size_t k = 0; k < m; ++k) out.diag[k] -= 0.5 * tau * fprime_line[k];
}

ScalarField compute_rhs_h(const ScalarField& u, const ReactionEval& reaction, double tau) {
    require_steppable(u, 2);
    const std::size_t n = u.n();
    const double inv_h2 = 1.0 / (u.grid().h * u.grid().h);

    // dyy(u^k) on every row (boundary rows included: the cross term
    // dxx(dyy u) at i=1 and i=N-2 reads them).
    ScalarField dyy(u.grid());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j + 1 < n; ++j)
            dyy.at(i, j) = (u.at(i, j + 1) - 2.0 * u.at(i, j) + u.at(i, j - 1)) * inv_h2;

    ScalarField h = u; // boundary entries keep u^k; the sweeps never read them
    for (std::size_t i = 1; i + 1 < n; ++i) {
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double dxx_u = (u.at(i + 1, j) - 2.0 * u.at(i, j) + u.at(i - 1, j)) * inv_h2;
            const double dxx_dyy =
                (dyy.at(i + 1, j) - 2.0 * dyy.at(i, j) + dyy.at(i - 1, j)) * inv_h2;
            const double fp = reaction.fprime.at(i, j);
            h.at(i, j) = (1.0 - 0.5 * tau * fp) * u.at(i, j) + tau * reaction.f.at(i, j) +
                         0.5 * tau * dxx_u + 0.25 * tau * tau * dxx_dyy +
                         (0.25 * tau * tau * fp + 0.5 * tau) * dyy.at(i, j);
        }
    }
    return h;
}

ScalarField sweep_x(const ScalarField& h_field, const ScalarField& fprime, double tau,
                    double* min_margin) {
    require_steppable(h_field, 2);
    const std::size_t n = h_field.n();
    const std::size_t m = n - 2;
    const double r = 0.5 * tau / (h_field.grid().h * h_field.grid().h);

    ScalarField ubar(h_field.grid());
    std::vector<double> rhs_line(m), fp_line(m), x(m), scratch(m);
    TridiagonalSystem sys;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            rhs_line[k] = h_field.at(k + 1, j);
            fp_line[k] = fprime.at(k + 1, j);
        }
        assemble_sweep_line(rhs_line, fp_line, r, tau, sys);
        track_margin(min_margin, sys);
        thomas_solve_into(sys.lower, sys.diag, sys.upper, sys.rhs, x, scratch);
        for (std::size_t k = 0; k < m; ++k) ubar.at(k + 1, j) = x[k];
    }
    apply_boundary_closure(ubar);
    return ubar;
}

ScalarField sweep_y(const ScalarField& ubar, double tau, double* min_margin) {
    require_steppable(ubar, 2);
    const std::size_t n = ubar.n();
    const std::size_t m = n - 2;
    const double r = 0.5 * tau / (ubar.grid().h * ubar.grid().h);

    ScalarField unew(ubar.grid());
    std::vector<double> rhs_line(m), x(m), scratch(m);
    TridiagonalSystem sys;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) rhs_line[k] = ubar.at(i, k + 1);
        assemble_sweep_line(rhs_line, {}, r, tau, sys);
        track_margin(min_margin, sys);
        thomas_solve_into(sys.lower, sys.diag, sys.upper, sys.rhs, x, scratch);
        for (std::size_t k = 0; k < m; ++k) unew.at(i, k + 1) = x[k];
    }
    apply_boundary_closure(unew);
    return unew;
}

AdiStepReport adi_step(const ScalarField& u, const SimParams& params, double tau_override) {
    require_steppable(u, 2);
    if (!u.finite()) throw BlowupDetected("input field has non-finite entries", 0.0);
    const double tau = tau_override > 0.0 ? tau_override : params.tau;

    ReactionEval reaction;
    if (params.mode == SolverMode::NonlocalKpp) {
        if (u.min_value() < kNegativityFloor)
            throw NegativePower("field below -1e-8 entering a kpp step");
        reaction = eval_reaction(u, params.alpha);
    } else {
        reaction.f = ScalarField(u.grid());
        reaction.fprime = ScalarField(u.grid());
        reaction.mass_k = mass(u);
    }

    const ScalarField h = compute_rhs_h(u, reaction, tau);
    double margin = std::numeric_limits<double>::infinity();
    const ScalarField ubar = sweep_x(h, reaction.fprime, tau, &margin);

    AdiStepReport report;
    report.new_field = sweep_y(ubar, tau, &margin);
    report.dominance_margin = margin;
    if (!report.new_field.finite())
        throw BlowupDetected("step produced non-finite values", 0.0);
    report.mass_after = mass(report.new_field);
    report.max_after = linf(report.new_field);
    report.negativity_flag = report.new_field.min_value() < 0.0;
    if (report.max_after > params.blowup_threshold)
        throw BlowupDetected("max norm exceeded blow-up threshold", 0.0);
    return report;
}

} // namespace nlkpp
