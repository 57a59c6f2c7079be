#pragma once

#include "nlkpp/field.hpp"

namespace nlkpp {

/// Pointwise reaction value and its frozen-mass derivative at one node.
struct PointwiseReaction {
    double f;      // u^alpha * (1 - m)
    double fprime; // alpha * u^(alpha-1) * (1 - m)
};

/// f and f' at a single nodal value with the nonlocal factor (1 - m) held
/// fixed. Conventions: u^0 == 1 including at u=0 (so alpha=1 gives
/// f' = 1-m everywhere); u^(alpha-1) at u=0 is 0 for every alpha != 1.
PointwiseReaction pointwise_reaction(double u, double alpha, double one_minus_m);

/// f(u^k) and f'(u^k) over the whole field, with the mass frozen at level k.
struct ReactionEval {
    ScalarField f;
    ScalarField fprime;
    double mass_k = 0.0;
    bool clamped = false; // some node in [-1e-8, 0) was clamped to zero
};

/// Evaluates the nonlocal reaction at one time level: computes the trapezoid
/// mass once, then f and f' pointwise with that mass frozen.
///
/// For fractional alpha, nodes below -1e-8 raise NegativePower; nodes in
/// [-1e-8, 0) are clamped to zero and flagged. Integer alpha evaluates the
/// raw power (negative values are well-defined there).
ReactionEval eval_reaction(const ScalarField& u, double alpha);

} // namespace nlkpp
