#pragma once

#include <vector>

#include "nlkpp/field.hpp"
#include "nlkpp/params.hpp"

namespace nlkpp {

/// One diagnostic sample of a run.
struct MassRecord {
    double t = 0.0;
    double mass = 0.0;
    double max_u = 0.0;
    double min_u = 0.0;
    double l2_norm = 0.0;
    double lk_norm = 0.0;      // L^k with k = lk_order
    double int_u_alpha = 0.0;  // trapezoid integral of u^alpha
    bool negativity_flag = false;
};

/// Time-stamped record of m(t) and the norms the theory checks consume.
/// append() enforces strictly increasing t and finite entries.
struct MassSeries {
    double lk_order = 0.0; // k used for lk_norm
    std::vector<MassRecord> records;

    void append(const MassRecord& rec);
    bool empty() const { return records.empty(); }
    std::size_t size() const { return records.size(); }
    const MassRecord& front() const { return records.front(); }
    const MassRecord& back() const { return records.back(); }
};

/// Samples every diagnostic of `field` at time t.
MassRecord sample_record(double t, const ScalarField& field, const SimParams& params);

} // namespace nlkpp
