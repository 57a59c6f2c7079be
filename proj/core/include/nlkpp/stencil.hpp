#pragma once

#include "nlkpp/field.hpp"

namespace nlkpp {

/// Second-order one-sided Neumann closure: boundary nodes are rebuilt from
/// the interior as u_0 = (4u_1 - u_2)/3 and u_{N-1} = (4u_{N-2} - u_{N-3})/3
/// along each axis. In 2D the four edges are filled first and each corner is
/// set to the average of its two one-sided extrapolations.
/// Requires N >= 4 per axis.
void apply_boundary_closure(ScalarField& u);

} // namespace nlkpp
