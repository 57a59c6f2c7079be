#include "nlkpp/functionals.hpp"

#include <cmath>
#include <cstdlib>

#include "nlkpp/errors.hpp"

namespace nlkpp {

namespace {

bool is_integer(double k) { return k == std::floor(k); }

// Fixed-order pairwise reduction of term(k) over [lo, hi).
template <typename F>
double pairwise_reduce(std::size_t lo, std::size_t hi, const F& term) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t k = lo; k < hi; ++k) s += term(k);
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_reduce(lo, mid, term) + pairwise_reduce(mid, hi, term);
}

} // namespace

double pairwise_sum(std::span<const double> xs) {
    return pairwise_reduce(0, xs.size(), [&](std::size_t k) { return xs[k]; });
}

double trapezoid_axis_weight(const GridSpec& grid, std::size_t i) {
    return (i == 0 || i + 1 == grid.n) ? 0.5 : 1.0;
}

double pow_scalar(double u, double k) {
    if (k == 0.0) return 1.0;
    if (k == 1.0) return u;
    if (k == 2.0) return u * u;
    if (k == 3.0) return u * u * u;
    if (k == 0.5) return std::sqrt(u);
    if (k == 1.5) return u * std::sqrt(u);
    return std::pow(u, k);
}

namespace {

// Weighted trapezoid reduction of g(u) over the grid.
template <typename G>
double trapezoid_reduce(const ScalarField& field, const G& g) {
    const GridSpec& grid = field.grid();
    const std::size_t n = grid.n;
    const auto u = field.values();
    if (grid.dim == 1) {
        const double s = pairwise_reduce(0, n, [&](std::size_t i) {
            return trapezoid_axis_weight(grid, i) * g(u[i]);
        });
        return s * grid.h;
    }
    const double s = pairwise_reduce(0, n * n, [&](std::size_t k) {
        const std::size_t i = k / n;
        const std::size_t j = k % n;
        return trapezoid_axis_weight(grid, i) * trapezoid_axis_weight(grid, j) * g(u[k]);
    });
    return s * grid.h * grid.h;
}

} // namespace

double mass(const ScalarField& field) {
    return trapezoid_reduce(field, [](double v) { return v; });
}

double integral_pow(const ScalarField& field, double k) {
    if (is_integer(k))
        return trapezoid_reduce(field, [k](double v) { return pow_scalar(v, k); });
    return trapezoid_reduce(field, [k](double v) { return pow_scalar(v < 0.0 ? 0.0 : v, k); });
}

double lk_norm(const ScalarField& field, double k) {
    if (k < 1.0) throw InvalidOrder("lk_norm requires k >= 1, got " + std::to_string(k));
    double integral;
    if (is_integer(k))
        integral = trapezoid_reduce(field, [k](double v) { return pow_scalar(std::abs(v), k); });
    else
        integral = trapezoid_reduce(field, [k](double v) { return pow_scalar(v < 0.0 ? 0.0 : v, k); });
    return std::pow(integral, 1.0 / k);
}

double linf(const ScalarField& field) {
    double m = 0.0;
    for (double v : field.values()) m = std::max(m, std::abs(v));
    return m;
}

} // namespace nlkpp
