#pragma once

#include <cstddef>
#include <span>

#include "nlkpp/field.hpp"

namespace nlkpp {

/// Fixed-order pairwise summation; deterministic regardless of build flags
/// or thread count, so repeated runs agree bitwise.
double pairwise_sum(std::span<const double> xs);

/// Composite trapezoid weight of node i along one axis, as a multiple of h
/// (1/2 at the two endpoints, 1 inside). 2D weights are the tensor product.
double trapezoid_axis_weight(const GridSpec& grid, std::size_t i);

/// Composite-trapezoid approximation of the integral of u over [0,b]^dim.
/// Exact for fields affine per axis.
double mass(const ScalarField& field);

/// Trapezoid integral of u^k. Fractional k clamps negative entries to zero;
/// integer k raises the raw value. The same convention the reaction term
/// uses, so diagnostics match the solver bit-for-bit.
double integral_pow(const ScalarField& field, double k);

/// (trapezoid integral of u^k)^(1/k). Integer k uses |u|; fractional k
/// clamps negatives to zero. Throws InvalidOrder for k < 1.
double lk_norm(const ScalarField& field, double k);

/// Maximum absolute nodal value.
double linf(const ScalarField& field);

/// u^k with fast paths for the exponents the presets use (1, 1.5, 2, 3).
/// Conventions: u^0 == 1 including at u=0; 0^k == 0 for fractional k != 0.
double pow_scalar(double u, double k);

} // namespace nlkpp
