#include "nlkpp/series.hpp"

#include <cmath>

#include "nlkpp/errors.hpp"
#include "nlkpp/functionals.hpp"

namespace nlkpp {

void MassSeries::append(const MassRecord& rec) {
    if (!records.empty() && !(rec.t > records.back().t))
        throw ValidationError("series times must be strictly increasing");
    if (!std::isfinite(rec.t) || !std::isfinite(rec.mass) || !std::isfinite(rec.max_u) ||
        !std::isfinite(rec.min_u) || !std::isfinite(rec.l2_norm) ||
        !std::isfinite(rec.lk_norm) || !std::isfinite(rec.int_u_alpha))
        throw ValidationError("series record has non-finite entries");
    records.push_back(rec);
}

MassRecord sample_record(double t, const ScalarField& field, const SimParams& params) {
    MassRecord rec;
    rec.t = t;
    rec.mass = mass(field);
    rec.max_u = field.max_value();
    rec.min_u = field.min_value();
    rec.l2_norm = lk_norm(field, 2.0);
    rec.lk_norm = lk_norm(field, params.effective_lk_order());
    rec.int_u_alpha = integral_pow(field, params.alpha);
    rec.negativity_flag = rec.min_u < 0.0;
    return rec;
}

} // namespace nlkpp
