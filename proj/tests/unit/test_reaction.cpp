#include <doctest.h>

#include <cmath>

#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/initial_condition.hpp"
#include "nlkpp/reaction.hpp"

using namespace nlkpp;

TEST_CASE("eval_reaction: direct substitutions") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 16.0);

    // mass exactly 1 kills the reaction for every alpha
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
        const auto r = eval_reaction(ScalarField(g, 1.0), alpha);
        CHECK(r.mass_k == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(linf(r.f) <= 1e-14);
        CHECK(linf(r.fprime) <= 1e-14);
    }

    // u = 0.5, alpha = 2: f = 0.25 * (1 - 0.5) = 0.125
    const auto rh = eval_reaction(ScalarField(g, 0.5), 2.0);
    CHECK(rh.f.at(3, 7) == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(rh.fprime.at(3, 7) == doctest::Approx(0.5).epsilon(1e-13));

    // u = 2, alpha = 1: f = 2 (1 - 2) = -2, f' = 1 - 2 = -1
    const auto r2 = eval_reaction(ScalarField(g, 2.0), 1.0);
    CHECK(r2.f.at(0, 0) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(r2.fprime.at(0, 0) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("eval_reaction: sign law and alpha=1 shape") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 16.0);
    const ScalarField u = build_field(PolyProductIc{0.5, 0.0}, g); // mass 0.5 < 1
    const auto r = eval_reaction(u, 1.5);
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] > 0.0) CHECK(r.f[k] > 0.0);

    const auto r1 = eval_reaction(u, 1.0);
    const double c = 1.0 - r1.mass_k;
    for (std::size_t k = 0; k < u.size(); ++k) {
        CHECK(r1.f[k] == doctest::Approx(u[k] * c).epsilon(1e-13));
        CHECK(r1.fprime[k] == c); // constant, including where u = 0
    }
}

TEST_CASE("pointwise_reaction: finite-difference check of the frozen-mass derivative") {
    const double one_minus_m = 0.42;
    const double u = 1.5, eps = 1e-5;
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
        const double fp = pointwise_reaction(u, alpha, one_minus_m).fprime;
        const double fd = (pointwise_reaction(u + eps, alpha, one_minus_m).f -
                           pointwise_reaction(u - eps, alpha, one_minus_m).f) /
                          (2.0 * eps);
        CHECK(fd == doctest::Approx(fp).epsilon(1e-6));
    }
}

TEST_CASE("pointwise_reaction: conventions at u = 0") {
    CHECK(pointwise_reaction(0.0, 1.0, 0.3).fprime == doctest::Approx(0.3)); // u^0 == 1
    CHECK(pointwise_reaction(0.0, 1.5, 0.3).f == 0.0);
    CHECK(pointwise_reaction(0.0, 1.5, 0.3).fprime == 0.0); // 0^{1/2} == 0
    CHECK(pointwise_reaction(0.0, 3.0, 0.3).f == 0.0);
}

TEST_CASE("eval_reaction: negativity clamping rules") {
    const GridSpec g = build_grid(1, 1.0, 0.25);
    ScalarField u(g, 0.5);

    u.at(2) = -1e-9; // benign undershoot: clamped, flagged
    const auto r = eval_reaction(u, 1.5);
    CHECK(r.clamped);
    CHECK(r.f.at(2) == 0.0);

    u.at(2) = -1e-6; // beyond the threshold with fractional alpha: loud
    CHECK_THROWS_AS(eval_reaction(u, 1.5), NegativePower);

    // integer alpha evaluates raw negative powers without complaint
    const auto r2 = eval_reaction(u, 2.0);
    const double c = 1.0 - r2.mass_k;
    CHECK(r2.f.at(2) == doctest::Approx(1e-12 * c).epsilon(1e-10));
    CHECK_FALSE(r2.clamped);
}

TEST_CASE("eval_reaction: mass_k matches functionals::mass bit for bit") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 32.0);
    const ScalarField u = build_field(HeatEigenmodeIc{0.1, 0.8}, g);
    CHECK(eval_reaction(u, 2.0).mass_k == mass(u));
}
