#include "nlkpp/field.hpp"

#include <algorithm>
#include <cmath>

#include "nlkpp/errors.hpp"

namespace nlkpp {

ScalarField::ScalarField(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.node_count())
        throw ValidationError("field size does not match grid");
}

bool ScalarField::finite() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return std::isfinite(v); });
}

double ScalarField::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    if (a.grid() != b.grid())
        throw ValidationError("max_abs_diff: fields live on different grids");
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

} // namespace nlkpp
