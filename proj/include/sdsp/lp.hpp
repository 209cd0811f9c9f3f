#ifndef SDSP_LP_HPP
#define SDSP_LP_HPP

#include <optional>

#include "sdsp/linalg.hpp"

namespace sdsp {

// Feasibility of {x >= 0 : A x = b} by phase-1 simplex with Bland's rule,
// exact rational arithmetic throughout. Returns a basic feasible solution.
std::optional<RatVec> lp_feasible_point(const RatMat& a, const RatVec& b);

}  // namespace sdsp

#endif
