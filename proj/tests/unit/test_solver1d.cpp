#include <doctest.h>

#include <cmath>

#include "nlkpp/errors.hpp"
#include "nlkpp/explicit_ref.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/initial_condition.hpp"
#include "nlkpp/runner.hpp"
#include "nlkpp/solver1d.hpp"
#include "nlkpp/theory_checks.hpp"

#include "test_helpers.hpp"

using namespace nlkpp;
using nlkpp::test::eigenmode_exact;
using nlkpp::test::reflect;

TEST_CASE("cn1d_step: constant with mass 1 is a fixed point") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 64.0);
    const Cn1dState s0 = make_cn1d_state(ScalarField(g, 1.0));
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
        SimParams p;
        p.alpha = alpha;
        p.tau = 1e-3;
        const Cn1dState s1 = cn1d_step(s0, p);
        CHECK(max_abs_diff(s1.field, s0.field) <= 1e-12);
    }
}

TEST_CASE("cn1d_step: heat eigenmode to T = 0.1 within 1e-3") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 64.0);
    SimParams p;
    p.mode = SolverMode::Heat;
    p.tau = 1e-3;
    Cn1dState s = make_cn1d_state(eigenmode_exact(g, 1.0, 0.1, 0.0));
    for (int k = 0; k < 100; ++k) s = cn1d_step(s, p);
    CHECK(max_abs_diff(s.field, eigenmode_exact(g, 1.0, 0.1, 0.1)) <= 1e-3);
}

TEST_CASE("cn1d_step: one case3 step matches the explicit micro-step oracle") {
    const GridSpec g = build_grid(1, 1.0, 0.01);
    const ScalarField u0 = build_field(CharacteristicBlockIc{0.3, 0.05, 10.0}, g);
    SimParams p;
    p.alpha = 2.0;
    p.tau = 1e-3;
    const Cn1dState s1 = cn1d_step(make_cn1d_state(u0), p);

    ExplicitParams ep;
    ep.tau_ref = p.tau / 1000.0;
    const ScalarField ref = explicit_run(u0, p, ep, p.tau);
    CHECK(max_abs_diff(s1.field, ref) <= 5e-3);
}

TEST_CASE("cn1d_step: reflection equivariance") {
    const GridSpec g = build_grid(1, 1.0, 1.0 / 32.0);
    ScalarField u(g);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.coord(i);
        u.at(i) = 0.5 + 0.2 * std::cos(M_PI * x) + 0.1 * std::cos(3.0 * M_PI * x);
    }
    SimParams p;
    p.alpha = 1.5;
    p.tau = 1e-3;
    const ScalarField direct = cn1d_step(make_cn1d_state(u), p).field;
    const ScalarField conj = reflect(cn1d_step(make_cn1d_state(reflect(u)), p).field);
    CHECK(max_abs_diff(direct, conj) <= 1e-12);
}

TEST_CASE("cn1d: heat-mode mass drift bounded by 5 h^2 at T = 1") {
    double prev_drift = -1.0;
    for (double h : {1.0 / 16.0, 1.0 / 32.0, 1.0 / 64.0}) {
        const GridSpec g = build_grid(1, 1.0, h);
        SimParams p;
        p.mode = SolverMode::Heat;
        p.tau = 1e-3;
        p.t_final = 1.0;
        const RunResult run = run_simulation(eigenmode_exact(g, 1.0, 0.1, 0.0), p);
        const double drift = std::abs(run.series.back().mass - run.series.front().mass);
        CHECK(drift <= 5.0 * h * h);
        if (prev_drift >= 0.0) CHECK(drift <= prev_drift + 1e-15);
        prev_drift = drift;
    }
}

TEST_CASE("cn1d: case3 mass is nondecreasing until the gap closes") {
    const GridSpec g = build_grid(1, 1.0, 0.01);
    SimParams p;
    p.alpha = 2.0;
    p.tau = 1e-3;
    p.t_final = 5.0;
    p.record_every = 1;
    const RunResult run =
        run_simulation(build_field(CharacteristicBlockIc{0.3, 0.05, 10.0}, g), p);
    const CheckReport rep = check_mass_monotone(run.series, +1, 1e-6, 1, 1e-3);
    CHECK(rep.passed);
}
