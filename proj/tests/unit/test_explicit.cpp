#include <doctest.h>

#include "nlkpp/errors.hpp"
#include "nlkpp/explicit_ref.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/initial_condition.hpp"

#include "test_helpers.hpp"

using namespace nlkpp;
using nlkpp::test::eigenmode_exact;

TEST_CASE("explicit_step: constant mass-1 state is unchanged") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 16.0);
    const ScalarField u(g, 1.0);
    SimParams p;
    p.alpha = 2.0;
    ExplicitParams ep;
    ep.tau_ref = 1e-5;
    CHECK(max_abs_diff(explicit_step(u, p, ep), u) <= 1e-15);
}

TEST_CASE("explicit_run: 1D heat eigenmode to T = 0.01 within 1e-5") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 64.0);
    SimParams p;
    p.mode = SolverMode::Heat;
    ExplicitParams ep;
    ep.tau_ref = 1e-6;
    const ScalarField out = explicit_run(eigenmode_exact(g, 1.0, 0.1, 0.0), p, ep, 0.01);
    CHECK(max_abs_diff(out, eigenmode_exact(g, 1.0, 0.1, 0.01)) <= 1e-5);
}

TEST_CASE("explicit_step: zero field stays zero (f(0) = 0)") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 16.0);
    const ScalarField zero(g, 0.0);
    SimParams p;
    p.alpha = 3.0;
    ExplicitParams ep;
    ep.tau_ref = 1e-5;
    CHECK(max_abs_diff(explicit_step(zero, p, ep), zero) == 0.0);
}

TEST_CASE("explicit_step: CFL guard") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 16.0);
    const ScalarField u(g, 1.0);
    SimParams p;
    ExplicitParams ep;
    ep.tau_ref = g.h * g.h / 3.0; // above h^2/4
    CHECK_THROWS_AS(explicit_step(u, p, ep), CflViolation);
    ep.cfl_guard = false;
    CHECK_NOTHROW(explicit_step(u, p, ep));
}
