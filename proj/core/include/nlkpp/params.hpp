#pragma once

#include <cstddef>
#include <string>

namespace nlkpp {

/// Which right-hand side the steppers integrate.
enum class SolverMode {
    NonlocalKpp, // u_t = laplace(u) + u^alpha (1 - mass)
    Heat,        // u_t = laplace(u)
};

std::string to_string(SolverMode mode);
SolverMode solver_mode_from_string(const std::string& s);

/// Everything a stepper and the run loop need besides the grid.
///
/// tau_init/tau_switch implement a two-phase step schedule: steps of
/// tau_init are taken until t reaches tau_switch, then tau takes over.
/// tau_init == 0 disables the initial phase.
struct SimParams {
    double alpha = 1.0;
    double tau = 1e-3;
    double t_final = 1.0;
    SolverMode mode = SolverMode::NonlocalKpp;
    std::size_t record_every = 20;
    double blowup_threshold = 1e8;
    double tau_init = 0.0;
    double tau_switch = 0.0;
    double lk_order = 0.0; // k for the recorded L^k norm; 0 -> default 2*alpha

    /// Throws ValidationError on out-of-range values (alpha < 0, tau <= 0, ...).
    void validate() const;

    double effective_lk_order() const {
        const double k = lk_order > 0.0 ? lk_order : 2.0 * alpha;
        return k < 1.0 ? 1.0 : k;
    }

    bool operator==(const SimParams&) const = default;
};

} // namespace nlkpp
