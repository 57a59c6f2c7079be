#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nlkpp/grid.hpp"

namespace nlkpp {

/// Nodal values of u on a GridSpec. 2D storage is row-major with the x index
/// major: entry (i,j) = values[i*N + j], matching "row index = x node index"
/// in the snapshot format.
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(GridSpec grid, double fill = 0.0)
        : grid_(grid), values_(grid.node_count(), fill) {}
    ScalarField(GridSpec grid, std::vector<double> values);

    const GridSpec& grid() const { return grid_; }
    std::size_t n() const { return grid_.n; }
    int dim() const { return grid_.dim; }
    std::size_t size() const { return values_.size(); }

    double& operator[](std::size_t flat) { return values_[flat]; }
    double operator[](std::size_t flat) const { return values_[flat]; }

    double& at(std::size_t i) { return values_[i]; }
    double at(std::size_t i) const { return values_[i]; }
    double& at(std::size_t i, std::size_t j) { return values_[i * grid_.n + j]; }
    double at(std::size_t i, std::size_t j) const { return values_[i * grid_.n + j]; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    /// True when every entry is finite (no NaN/Inf).
    bool finite() const;

    double min_value() const;
    double max_value() const;

    bool operator==(const ScalarField&) const = default;

private:
    GridSpec grid_;
    std::vector<double> values_;
};

/// max_ij |a - b|; fields must share a grid.
double max_abs_diff(const ScalarField& a, const ScalarField& b);

} // namespace nlkpp
