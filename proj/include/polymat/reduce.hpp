#pragma once

#include "polymat/setfn.hpp"
#include "polymat/simplex.hpp"

namespace polymat {

// f = g + h with both components polymatroids on the ground set of f,
// h({a}) = 0 and h independent of a, h(N) maximal; g is then a-reduced.
struct Decomposition {
  SetFunction g;
  SetFunction h;
};

// Exact simplex on dense rational tableaus stays desk-scale up to here.
inline constexpr int kReduceCap = 7;

// The LP behind reduce: variables are h on the nonempty subsets of N \ {a};
// the extension h(aA) = h(A) is substituted into the constraints for
// g = f - h, so independence from a holds structurally. Objective is
// h(N \ {a}).
LpInstance build_reduce_lp(const SetFunction& f, int a);

Decomposition reduce(const SetFunction& f, int a);

// True iff the optimal h vanishes identically (LP optimum 0).
bool is_a_reduced(const SetFunction& f, int a);

}  // namespace polymat
