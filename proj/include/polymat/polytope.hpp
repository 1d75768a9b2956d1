#pragma once

#include <vector>

#include "polymat/setfn.hpp"

namespace polymat {

// Per-element intervals [0, f({i})] surrounding the base polytope.
struct Box {
  QVec upper;
};

// x_{perm[0]} = f({perm[0]}), then marginal gains along the permutation.
// The result is a vertex of the base polytope of a polymatroid f.
QVec greedy_vertex(const SetFunction& f, const std::vector<int>& perm);

// Full-lattice membership test for the base polytope: every proper subset sum
// bounded by f, total equal to f(N). Independent of the greedy code path.
bool contains(const SetFunction& f, const QVec& p);

Box bounding_box(const SetFunction& f);

// Box edge ratio anchored at a: max_b f({b}) / f({a}).
Rat elongation(const SetFunction& f, int a);

}  // namespace polymat
