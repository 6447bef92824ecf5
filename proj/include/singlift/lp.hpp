#pragma once

#include <vector>

#include "singlift/rational.hpp"

namespace singlift {

// Exact rational linear program:  minimize c.x  s.t.  A x >= b,  x >= lower.
// Every variable carries a finite lower bound (0 or 1 in all callers here).
struct LpProblem {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<Rational> lower;
};

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> point;  // minimizer, Optimal only
  std::vector<Rational> ray;    // recession direction with c.ray < 0, Unbounded only
};

// Two-phase dense simplex with Bland's rule; exact, terminating, no scaling.
LpResult solve_lp_min(const LpProblem& p);

}  // namespace singlift
