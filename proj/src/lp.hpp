#pragma once

#include "util.hpp"
#include "vec.hpp"

#include <vector>

namespace gk {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rat value;           // objective value when optimal
  std::vector<Rat> x;  // primal solution when optimal
};

// Maximize c.x subject to a x = b, x >= 0, in exact rational arithmetic.
// Two-phase dense simplex with Bland's rule, so it always terminates.
LpSolution lp_solve(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                    const std::vector<Rat>& c);

}  // namespace gk
