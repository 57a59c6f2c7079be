#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"
#include "nlkpp/initial_condition.hpp"

using namespace nlkpp;

TEST_CASE("mass: paper values for the preset initial data") {
    const GridSpec g = build_grid(2, 1.0, 0.01);

    // case 1 polynomial: continuous integral 0.5, trapezoid is exact here
    const ScalarField u1 = build_field(PolyProductIc{0.5, 0.0}, g);
    CHECK(mass(u1) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(std::abs(mass(u1) - 0.5) < 1e-13);

    // constant 1 integrates to exactly the domain volume
    const ScalarField uc(g, 1.0);
    CHECK(mass(uc) == doctest::Approx(1.0).epsilon(1e-13));

    // case 2 block: 25 nodes * 250 * h^2 = 0.625
    const ScalarField u2 = build_field(CharacteristicBlockIc{0.3, 0.05, 250.0}, g);
    CHECK(mass(u2) == doctest::Approx(0.625).epsilon(1e-13));
}

TEST_CASE("lk_norm: constants, block, and order validation") {
    const GridSpec g = build_grid(2, 1.0, 0.01);
    for (double k : {1.0, 2.0, 3.0, 2.5}) {
        const ScalarField uc(g, 0.7);
        CHECK(lk_norm(uc, k) == doctest::Approx(0.7).epsilon(1e-12));
    }

    const ScalarField block = build_field(CharacteristicBlockIc{0.3, 0.05, 250.0}, g);
    const double integral = integral_pow(block, 3.0);
    CHECK(integral == doctest::Approx(3.90625e4).epsilon(1e-9));
    CHECK(lk_norm(block, 3.0) == doctest::Approx(std::cbrt(3.90625e4)).epsilon(1e-12));

    const ScalarField zero(g, 0.0);
    CHECK(lk_norm(zero, 2.0) == 0.0);

    CHECK_THROWS_AS(lk_norm(zero, 0.5), InvalidOrder);
}

TEST_CASE("linf: absolute maximum") {
    const GridSpec g1 = build_grid(1, 1.0, 0.01);
    const ScalarField block = build_field(CharacteristicBlockIc{0.3, 0.05, 10.0}, g1);
    CHECK(linf(block) == 10.0);

    const ScalarField neg(g1, -2.0);
    CHECK(linf(neg) == 2.0);
    CHECK(linf(ScalarField(g1, 0.0)) == 0.0);
}

TEST_CASE("quadrature weights sum to the domain volume") {
    for (auto [dim, b, h] : {std::tuple{1, 1.0, 0.01}, {2, 1.0, 1.0 / 64.0}, {2, 2.0, 0.125}}) {
        const GridSpec g = build_grid(dim, b, h);
        const double volume = dim == 1 ? b : b * b;
        CHECK(mass(ScalarField(g, 1.0)) == doctest::Approx(volume).epsilon(1e-13));
    }
}

TEST_CASE("mass is linear and trapezoid-exact on per-axis-affine fields") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 32.0);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(0.0, 3.0);
    ScalarField u(g), v(g);
    for (std::size_t k = 0; k < u.size(); ++k) {
        u[k] = dist(rng);
        v[k] = dist(rng);
    }
    const double a = 1.7, c = -0.4;
    ScalarField w(g);
    for (std::size_t k = 0; k < u.size(); ++k) w[k] = a * u[k] + c * v[k];
    CHECK(mass(w) == doctest::Approx(a * mass(u) + c * mass(v)).epsilon(1e-12));

    // u(x,y) = x integrates to b^dim * b / 2 exactly
    for (double b : {1.0, 2.0}) {
        const GridSpec gb = build_grid(2, b, b / 16.0);
        ScalarField ux(gb);
        for (std::size_t i = 0; i < gb.n; ++i)
            for (std::size_t j = 0; j < gb.n; ++j) ux.at(i, j) = gb.coord(i);
        CHECK(mass(ux) == doctest::Approx(b * b * b / 2.0).epsilon(1e-14));
    }
}

TEST_CASE("mass and lk_norm are monotone in the field") {
    const GridSpec g = build_grid(2, 1.0, 1.0 / 16.0);
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    ScalarField u(g), w(g);
    for (std::size_t k = 0; k < u.size(); ++k) {
        u[k] = dist(rng);
        w[k] = u[k] + std::abs(dist(rng));
    }
    CHECK(mass(u) <= mass(w));
    for (double k : {1.0, 1.5, 3.0}) CHECK(lk_norm(u, k) <= lk_norm(w, k));
}

TEST_CASE("discrete Jensen: int u^alpha >= m^alpha - 10 h^2 on smooth presets") {
    for (double h : {1.0 / 16.0, 1.0 / 32.0}) {
        const GridSpec g = build_grid(2, 1.0, h);
        for (const auto& ic :
             {InitialConditionSpec{PolyProductIc{0.5, 0.0}}, {PolyProductIc{1.0, 1.0}},
              {HeatEigenmodeIc{0.1, 1.0}}}) {
            const ScalarField u = build_field(ic, g);
            const double m = mass(u);
            for (double alpha : {1.5, 2.0, 3.0})
                CHECK(integral_pow(u, alpha) >= std::pow(m, alpha) - 10.0 * h * h);
        }
    }
}

TEST_CASE("pairwise_sum matches sequential summation and is deterministic") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> xs(10007);
    for (auto& x : xs) x = dist(rng);
    const double seq = std::accumulate(xs.begin(), xs.end(), 0.0);
    const double pw = pairwise_sum(xs);
    CHECK(pw == doctest::Approx(seq).epsilon(1e-12));
    CHECK(pairwise_sum(xs) == pw);
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}
