#include "nlkpp/initial_condition.hpp"

#include <cmath>

#include "nlkpp/csv_io.hpp"
#include "nlkpp/errors.hpp"

namespace nlkpp {

namespace {

double poly_factor(double x, double c) { return -2.0 * x * x * x + 3.0 * x * x + c; }

// Half-open membership test with a small tolerance so nodes sitting on the
// lower edge are kept and nodes on the upper edge are dropped, regardless of
// representation jitter in i*h.
bool in_block(double x, double lo, double side) {
    const double eps = 1e-9 * side;
    return x >= lo - eps && x < lo + side - eps;
}

// integral of -2x^3 + 3x^2 + c over [0, b]
double poly_factor_integral(double b, double c) {
    return -b * b * b * b / 2.0 + b * b * b + c * b;
}

} // namespace

ScalarField build_field(const InitialConditionSpec& ic, const GridSpec& grid) {
    ScalarField field(grid);
    const std::size_t n = grid.n;

    if (const auto* poly = std::get_if<PolyProductIc>(&ic)) {
        if (grid.dim == 1) {
            for (std::size_t i = 0; i < n; ++i)
                field.at(i) = poly_factor(grid.coord(i), poly->c_x);
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const double fx = poly_factor(grid.coord(i), poly->c_x);
                for (std::size_t j = 0; j < n; ++j)
                    field.at(i, j) = fx * poly_factor(grid.coord(j), poly->c_y);
            }
        }
        return field;
    }

    if (const auto* block = std::get_if<CharacteristicBlockIc>(&ic)) {
        if (!(block->side > 0.0)) throw ValidationError("block ic requires side > 0");
        if (grid.dim == 1) {
            for (std::size_t i = 0; i < n; ++i)
                field.at(i) = in_block(grid.coord(i), block->x_lo, block->side) ? block->height : 0.0;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const bool xin = in_block(grid.coord(i), block->x_lo, block->side);
                if (!xin) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (in_block(grid.coord(j), block->x_lo, block->side))
                        field.at(i, j) = block->height;
            }
        }
        return field;
    }

    if (const auto* c = std::get_if<ConstantIc>(&ic)) {
        for (auto& v : field.values()) v = c->value;
        return field;
    }

    if (const auto* eig = std::get_if<HeatEigenmodeIc>(&ic)) {
        const double w = M_PI / grid.b;
        if (grid.dim == 1) {
            for (std::size_t i = 0; i < n; ++i)
                field.at(i) = eig->mean + eig->amplitude * std::cos(w * grid.coord(i));
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const double cx = std::cos(w * grid.coord(i));
                for (std::size_t j = 0; j < n; ++j)
                    field.at(i, j) = eig->mean + eig->amplitude * cx * std::cos(w * grid.coord(j));
            }
        }
        return field;
    }

    const auto& file = std::get<FromFileIc>(ic);
    field = read_snapshot_csv(file.path, grid);
    if (!field.finite()) throw FileError("initial data in " + file.path + " has non-finite entries");
    return field;
}

std::optional<double> intended_mass(const InitialConditionSpec& ic, const GridSpec& grid) {
    const double b = grid.b;
    if (const auto* poly = std::get_if<PolyProductIc>(&ic)) {
        double m = poly_factor_integral(b, poly->c_x);
        if (grid.dim == 2) m *= poly_factor_integral(b, poly->c_y);
        return m;
    }
    if (const auto* block = std::get_if<CharacteristicBlockIc>(&ic)) {
        double m = block->height;
        for (int d = 0; d < grid.dim; ++d) m *= block->side;
        return m;
    }
    if (const auto* c = std::get_if<ConstantIc>(&ic))
        return c->value * (grid.dim == 1 ? b : b * b);
    if (const auto* eig = std::get_if<HeatEigenmodeIc>(&ic))
        return eig->mean * (grid.dim == 1 ? b : b * b); // the cosine integrates to zero
    return std::nullopt;
}

} // namespace nlkpp
