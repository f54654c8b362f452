#pragma once

#include <vector>

#include "pastures/rational.hpp"

namespace pastures {

// Linear constraint a.x >= b, or a.x == b when eq is set.
struct LinCon {
  QVec a;
  Rat b;
  bool eq = false;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;
  QVec x;
};

// Exact two-phase dense simplex over the rationals with Bland's rule.
// Variables are free; n may be zero.
LpResult lp_solve(int n, const std::vector<LinCon>& cons, const QVec& objective,
                  bool maximize);

bool lp_feasible(int n, const std::vector<LinCon>& cons);

} // namespace pastures
