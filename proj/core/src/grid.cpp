#include "nlkpp/grid.hpp"

#include <cmath>
#include <string>

#include "nlkpp/errors.hpp"

namespace nlkpp {

GridSpec build_grid(int dim, double b, double h) {
    if (dim != 1 && dim != 2)
        throw ValidationError("grid dim must be 1 or 2, got " + std::to_string(dim));
    if (!(b > 0.0) || !(h > 0.0))
        throw ValidationError("grid requires b > 0 and h > 0");
    const double ratio = b / h;
    const double cells = std::round(ratio);
    if (std::abs(ratio - cells) > 1e-12 * ratio)
        throw NonIntegralRatio("b/h = " + std::to_string(ratio) + " is not a whole number of cells");
    GridSpec grid;
    grid.dim = dim;
    grid.b = b;
    grid.h = h;
    grid.n = static_cast<std::size_t>(cells) + 1;
    return grid;
}

} // namespace nlkpp
