#pragma once

#include <vector>

#include "glnq/common.hpp"

namespace glnq {

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
  unsigned pivots = 0;
};

/// Maximizes c.x subject to A x <= b and x >= 0, in exact rational arithmetic
/// (dense tableau, Bland's rule). Requires b >= 0 so that x = 0 is feasible;
/// throws Infeasible otherwise and when the program is unbounded.
LpSolution maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c);

}  // namespace glnq
