#include "polymat/setfn.hpp"

namespace polymat {

SetFunction::SetFunction(GroundSet ground, QVec values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (ground_.size() > kDenseCap)
    throw std::length_error("ground set exceeds dense table cap (" +
                            std::to_string(kDenseCap) + ")");
  if (static_cast<std::size_t>(values_.size()) != ground_.table_size())
    throw std::invalid_argument("value table must have 2^n entries");
}

SetFunction SetFunction::zero(const GroundSet& g) {
  if (g.size() > kDenseCap)
    throw std::length_error("ground set exceeds dense table cap");
  QVec v(g.table_size());
  v.setZero();
  return SetFunction(g, std::move(v));
}

const Rat& SetFunction::operator()(Mask A) const {
  if (A > full())
    throw std::out_of_range("subset mask out of range");
  return values_[A];
}

Rat eval(const SetFunction& f, Mask A) { return f(A); }

Rat cond(const SetFunction& f, Mask A, Mask B) { return f(A | B) - f(B); }

Rat mi(const SetFunction& f, Mask A, Mask B) {
  return f(A) + f(B) - f(A | B);
}

Rat cmi(const SetFunction& f, Mask A, Mask B, Mask C) {
  return f(A | C) + f(B | C) - f(A | B | C) - f(C);
}

SetFunction add(const SetFunction& f, const SetFunction& g) {
  if (!(f.ground() == g.ground()))
    throw std::invalid_argument("mismatched ground sets");
  QVec v = f.values() + g.values();
  return SetFunction(f.ground(), std::move(v));
}

SetFunction scale(const SetFunction& f, const Rat& c) {
  if (c < 0)
    throw std::domain_error("negative scalar breaks the polymatroid cone");
  QVec v = f.values() * c;
  return SetFunction(f.ground(), std::move(v));
}

SetFunction modular(const GroundSet& g, const std::vector<Rat>& weights) {
  if (static_cast<int>(weights.size()) != g.size())
    throw std::invalid_argument("modular: need one weight per element");
  QVec v(g.table_size());
  v[0] = 0;
  for (Mask A = 1; A <= g.full(); ++A) {
    int i = std::countr_zero(A);
    v[A] = v[A & (A - 1)] + weights[i];
  }
  return SetFunction(g, std::move(v));
}

AxiomReport check_axioms(const SetFunction& f, const AxiomScanOptions& opt) {
  return scan_axioms(f.ground(), [&](Mask A) -> const Rat& { return f(A); },
                     opt);
}

bool is_polymatroid(const SetFunction& f) { return check_axioms(f).ok(); }

bool is_monotone(const SetFunction& f) {
  const int n = f.n();
  bool drop = false;
  for (int i = 0; i < n && !drop; ++i) {
    const Mask rest = f.full() ^ elem_bit(i);
    for_each_submask(rest, [&](Mask A) {
      if (f(A | elem_bit(i)) < f(A)) drop = true;
    });
  }
  return !drop;
}

bool depends_on(const SetFunction& h, int a) {
  bool found = false;
  for_each_submask(h.full() ^ elem_bit(a), [&](Mask A) {
    if (h(A | elem_bit(a)) != h(A)) found = true;
  });
  return found;
}

Rat c_ratio(const SetFunction& f, int a) {
  const Rat& fa = f(elem_bit(a));
  if (fa == 0)
    throw std::domain_error("ratio undefined: f(" + f.ground().label(a) +
                            ") = 0");
  Rat best = 0;
  for (int b = 0; b < f.n(); ++b) {
    Rat r = f(elem_bit(b)) / fa;
    if (r > best) best = r;
  }
  return best;
}

}  // namespace polymat
