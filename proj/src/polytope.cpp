#include "polymat/polytope.hpp"

#include <stdexcept>

namespace polymat {

QVec greedy_vertex(const SetFunction& f, const std::vector<int>& perm) {
  const int n = f.n();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("greedy_vertex: permutation length mismatch");
  Mask seen = 0;
  QVec x(n);
  for (int j = 0; j < n; ++j) {
    const int e = perm[j];
    if (e < 0 || e >= n || has_elem(seen, e))
      throw std::invalid_argument("greedy_vertex: not a permutation");
    x[e] = f(seen | elem_bit(e)) - f(seen);
    seen |= elem_bit(e);
  }
  return x;
}

bool contains(const SetFunction& f, const QVec& p) {
  const int n = f.n();
  if (p.size() != n)
    throw std::invalid_argument("contains: point dimension mismatch");
  const Mask full = f.full();
  for (Mask A = 1; A <= full; ++A) {
    Rat sum = 0;
    for_each_elem(A, [&](int i) { sum += p[i]; });
    if (A == full) {
      if (sum != f(full)) return false;
    } else if (sum > f(A)) {
      return false;
    }
  }
  return true;
}

Box bounding_box(const SetFunction& f) {
  Box box;
  box.upper = QVec(f.n());
  for (int i = 0; i < f.n(); ++i) box.upper[i] = f(elem_bit(i));
  return box;
}

Rat elongation(const SetFunction& f, int a) {
  const Box box = bounding_box(f);
  if (box.upper[a] == 0)
    throw std::domain_error("elongation undefined: f(" + f.ground().label(a) +
                            ") = 0");
  Rat best = 0;
  for (int b = 0; b < f.n(); ++b) {
    Rat r = box.upper[b] / box.upper[a];
    if (r > best) best = r;
  }
  return best;
}

}  // namespace polymat
