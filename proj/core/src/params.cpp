#include "nlkpp/params.hpp"

#include "nlkpp/errors.hpp"

namespace nlkpp {

std::string to_string(SolverMode mode) {
    return mode == SolverMode::Heat ? "heat" : "nonlocal-kpp";
}

SolverMode solver_mode_from_string(const std::string& s) {
    if (s == "heat") return SolverMode::Heat;
    if (s == "nonlocal-kpp") return SolverMode::NonlocalKpp;
    throw ValidationError("unknown solver mode '" + s + "' (expected nonlocal-kpp or heat)");
}

void SimParams::validate() const {
    if (alpha < 0.0) throw ValidationError("alpha must be >= 0");
    if (!(tau > 0.0)) throw ValidationError("tau must be > 0");
    if (!(t_final > 0.0)) throw ValidationError("t_final must be > 0");
    if (!(blowup_threshold > 0.0)) throw ValidationError("blowup_threshold must be > 0");
    if (record_every == 0) throw ValidationError("record_every must be >= 1");
    if (tau_init < 0.0 || tau_switch < 0.0)
        throw ValidationError("tau_init and tau_switch must be >= 0");
    if (tau_init > 0.0 && !(tau_switch > 0.0))
        throw ValidationError("tau_init requires a positive tau_switch time");
    if (lk_order != 0.0 && lk_order < 1.0)
        throw ValidationError("lk_order must be 0 (default) or >= 1");
}

} // namespace nlkpp
