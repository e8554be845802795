#pragma once
/* Exact rational linear-programming feasibility: phase-one simplex with
 * Bland's rule.  Finds x with sum_j A[i][j] x_j (rel_i) b_i, x free. */

#include <optional>

#include "basics.hpp"

namespace camb {

enum class Rel { Le, Ge, Eq };

struct LinearConstraint {
  VecR a;
  Rel rel;
  Rat b;
};

/* Returns a feasible point or nullopt if the system is infeasible. */
std::optional<VecR> lpFeasible(const std::vector<LinearConstraint>& cons,
                               size_t nvars);

}  // namespace camb
