#pragma once

#include <optional>
#include <string>
#include <variant>

#include "nlkpp/field.hpp"
#include "nlkpp/grid.hpp"

namespace nlkpp {

/// u0 = (-2x^3 + 3x^2 + c_x) * (-2y^3 + 3y^2 + c_y); in 1D only the x factor.
struct PolyProductIc {
    double c_x = 0.0;
    double c_y = 0.0;
    bool operator==(const PolyProductIc&) const = default;
};

/// u0 = height on the half-open block [x_lo, x_lo+side)^dim, 0 elsewhere.
/// The half-open evaluation makes the trapezoid mass of a grid-aligned block
/// equal height * side^dim exactly (the block covers a whole number of cells).
struct CharacteristicBlockIc {
    double x_lo = 0.0;
    double side = 0.0;
    double height = 0.0;
    bool operator==(const CharacteristicBlockIc&) const = default;
};

/// u0 = value everywhere.
struct ConstantIc {
    double value = 0.0;
    bool operator==(const ConstantIc&) const = default;
};

/// u0 = mean + amplitude * prod_d cos(pi x_d / b); the slowest Neumann mode.
struct HeatEigenmodeIc {
    double amplitude = 0.0;
    double mean = 0.0;
    bool operator==(const HeatEigenmodeIc&) const = default;
};

/// u0 loaded from a CSV matrix (snapshot format).
struct FromFileIc {
    std::string path;
    bool operator==(const FromFileIc&) const = default;
};

using InitialConditionSpec =
    std::variant<PolyProductIc, CharacteristicBlockIc, ConstantIc, HeatEigenmodeIc, FromFileIc>;

/// Nodal evaluation of the initial condition. Deterministic and pure:
/// equal inputs produce bitwise-equal fields. Throws FileError for a
/// FromFile source that is unreadable or does not match the grid.
ScalarField build_field(const InitialConditionSpec& ic, const GridSpec& grid);

/// Closed-form integral of the initial condition over [0,b]^dim, when one
/// exists (everything except FromFile). Used as the intended m0 for checks.
std::optional<double> intended_mass(const InitialConditionSpec& ic, const GridSpec& grid);

} // namespace nlkpp
