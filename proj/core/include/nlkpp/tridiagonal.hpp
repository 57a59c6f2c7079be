#pragma once

#include <span>
#include <vector>

namespace nlkpp {

/// One tridiagonal system A x = rhs with M unknowns.
struct TridiagonalSystem {
    std::vector<double> lower; // length M-1
    std::vector<double> diag;  // length M
    std::vector<double> upper; // length M-1
    std::vector<double> rhs;   // length M
};

/// Thomas algorithm, no pivoting. Diagonal dominance is the documented
/// operating regime; a pivot with magnitude < 1e-14 * max|diag| raises
/// ZeroPivot instead of silently pivoting.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

/// In-place core used by the sweeps: solves into x using scratch (length M)
/// without allocating. lower/upper have length M-1.
void thomas_solve_into(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<const double> rhs,
                       std::span<double> x, std::span<double> scratch);

} // namespace nlkpp
