#pragma once

#include "looijenga/numeric.hpp"

#include <optional>
#include <vector>

namespace looijenga {

// Exact rational linear programming, phase-1 only (feasibility), Bland's rule.
//
// System: A x = b with x_j >= 0 for j in nonneg, x_j free otherwise.
// Free variables are split internally.
struct LpProblem {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<bool> nonneg;  // per column of a
};

struct LpResult {
  bool feasible = false;
  std::vector<Rat> x;       // a feasible point when feasible
  std::vector<Rat> farkas;  // y with y^T A <= 0 (componentwise on nonneg cols,
                            // = 0 on free cols) and y^T b > 0 when infeasible
};

LpResult lp_solve(const LpProblem& p);

}  // namespace looijenga
