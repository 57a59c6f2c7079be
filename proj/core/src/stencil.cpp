#include "nlkpp/stencil.hpp"

#include "nlkpp/errors.hpp"

namespace nlkpp {

namespace {
double extrapolate(double near, double far) { return (4.0 * near - far) / 3.0; }
} // namespace

void apply_boundary_closure(ScalarField& u) {
    const std::size_t n = u.n();
    if (n < 4) throw ValidationError("boundary closure requires N >= 4 per axis");

    if (u.dim() == 1) {
        u.at(0) = extrapolate(u.at(1), u.at(2));
        u.at(n - 1) = extrapolate(u.at(n - 2), u.at(n - 3));
        return;
    }

    for (std::size_t j = 1; j + 1 < n; ++j) {
        u.at(0, j) = extrapolate(u.at(1, j), u.at(2, j));
        u.at(n - 1, j) = extrapolate(u.at(n - 2, j), u.at(n - 3, j));
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        u.at(i, 0) = extrapolate(u.at(i, 1), u.at(i, 2));
        u.at(i, n - 1) = extrapolate(u.at(i, n - 2), u.at(i, n - 3));
    }
    // corners: average of the two one-sided extrapolations
    u.at(0, 0) = 0.5 * (extrapolate(u.at(1, 0), u.at(2, 0)) + extrapolate(u.at(0, 1), u.at(0, 2)));
    u.at(0, n - 1) = 0.5 * (extrapolate(u.at(1, n - 1), u.at(2, n - 1)) +
                            extrapolate(u.at(0, n - 2), u.at(0, n - 3)));
    u.at(n - 1, 0) = 0.5 * (extrapolate(u.at(n - 2, 0), u.at(n - 3, 0)) +
                            extrapolate(u.at(n - 1, 1), u.at(n - 1, 2)));
    u.at(n - 1, n - 1) = 0.5 * (extrapolate(u.at(n - 2, n - 1), u.at(n - 3, n - 1)) +
                                extrapolate(u.at(n - 1, n - 2), u.at(n - 1, n - 3)));
}

} // namespace nlkpp
