#include "nlkpp/reaction.hpp"

#include <cmath>
#include <string>

#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"

namespace nlkpp {

namespace {
constexpr double kClampThreshold = -1e-8;
bool is_integer(double k) { return k == std::floor(k); }
} // namespace

PointwiseReaction pointwise_reaction(double u, double alpha, double one_minus_m) {
    if (alpha == 1.0) // u^0 == 1 including at u = 0
        return {u * one_minus_m, one_minus_m};
    const double up = (u == 0.0) ? 0.0 : pow_scalar(u, alpha - 1.0);
    return {up * u * one_minus_m, alpha * up * one_minus_m};
}

ReactionEval eval_reaction(const ScalarField& u, double alpha) {
    if (alpha < 0.0) throw ValidationError("eval_reaction requires alpha >= 0");
    const bool integer_alpha = is_integer(alpha);

    ReactionEval out;
    out.mass_k = mass(u);
    out.f = ScalarField(u.grid());
    out.fprime = ScalarField(u.grid());
    const double one_minus_m = 1.0 - out.mass_k;

    const auto uv = u.values();
    auto fv = out.f.values();
    auto fpv = out.fprime.values();
    for (std::size_t k = 0; k < uv.size(); ++k) {
        double v = uv[k];
        if (!integer_alpha && v < 0.0) {
            if (v < kClampThreshold)
                throw NegativePower("node value " + std::to_string(v) +
                                    " below clamp threshold with fractional alpha");
            v = 0.0;
            out.clamped = true;
        }
        const auto pw = pointwise_reaction(v, alpha, one_minus_m);
        fv[k] = pw.f;
        fpv[k] = pw.fprime;
    }
    return out;
}

} // namespace nlkpp
