#pragma once

#include <cstddef>

namespace nlkpp {

/// Uniform nodal grid over [0,b]^dim with spacing h and N = b/h + 1 nodes
/// per axis. Node i (0-based) sits at i*h; the last node is pinned to b so
/// both endpoints are exact.
struct GridSpec {
    int dim = 2;        // 1 or 2
    double b = 1.0;     // domain edge length
    double h = 0.0;     // node spacing
    std::size_t n = 0;  // nodes per axis

    /// Coordinate of node i along either axis.
    double coord(std::size_t i) const { return i + 1 == n ? b : static_cast<double>(i) * h; }

    /// Total node count (N in 1D, N*N in 2D).
    std::size_t node_count() const { return dim == 1 ? n : n * n; }

    bool operator==(const GridSpec&) const = default;
};

/// Builds a GridSpec, enforcing that b/h is a whole number of cells.
/// Throws NonIntegralRatio if |b/h - round(b/h)| > 1e-12 * (b/h).
GridSpec build_grid(int dim, double b, double h);

} // namespace nlkpp
