#include "nlkpp/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlkpp/errors.hpp"

namespace nlkpp {

void thomas_solve_into(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<const double> rhs,
                       std::span<double> x, std::span<double> scratch) {
    const std::size_t m = diag.size();
    double diag_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) diag_max = std::max(diag_max, std::abs(diag[i]));
    const double pivot_floor = 1e-14 * diag_max;

    double pivot = diag[0];
    if (std::abs(pivot) <= pivot_floor) throw ZeroPivot("zero pivot at row 0");
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < m; ++i) {
        scratch[i] = upper[i - 1] / pivot;
        pivot = diag[i] - lower[i - 1] * scratch[i];
        if (std::abs(pivot) <= pivot_floor)
            throw ZeroPivot("zero pivot at row " + std::to_string(i));
        x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;) x[i] -= scratch[i + 1] * x[i + 1];
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t m = sys.diag.size();
    if (m == 0) throw ValidationError("thomas_solve: empty system");
    if (sys.lower.size() + 1 != m || sys.upper.size() + 1 != m || sys.rhs.size() != m)
        throw ValidationError("thomas_solve: inconsistent band lengths");
    std::vector<double> x(m), scratch(m);
    thomas_solve_into(sys.lower, sys.diag, sys.upper, sys.rhs, x, scratch);
    return x;
}

} // namespace nlkpp
