#pragma once

#include <vector>

#include "polymat/rational.hpp"

namespace polymat {

enum class Sense { Le, Eq, Ge };

struct LpRow {
  QVec coeffs;
  Sense sense = Sense::Le;
  Rat rhs;
};

// max objective . x  subject to the rows and x >= 0.
struct LpInstance {
  Eigen::Index nvars = 0;
  std::vector<LpRow> rows;
  QVec objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat optimum;
  QVec x;
  long pivots = 0;
};

// Exact two-phase primal simplex with Bland's anti-cycling rule and a
// deterministic slack/artificial starting basis. Terminates on every input.
LpResult exact_lp_max(const LpInstance& lp);

}  // namespace polymat
