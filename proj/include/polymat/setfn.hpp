#pragma once

#include <vector>

#include "polymat/axioms.hpp"
#include "polymat/mask.hpp"
#include "polymat/rational.hpp"

namespace polymat {

// Dense exact-rational set function: values over the full subset lattice,
// indexed by subset mask. Immutable after construction.
class SetFunction {
 public:
  SetFunction(GroundSet ground, QVec values);

  static SetFunction zero(const GroundSet& g);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }
  const QVec& values() const { return values_; }

  const Rat& operator()(Mask A) const;

  bool operator==(const SetFunction& other) const {
    if (!(ground_ == other.ground_)) return false;
    for (Eigen::Index i = 0; i < values_.size(); ++i)
      if (values_[i] != other.values_[i]) return false;
    return true;
  }

 private:
  GroundSet ground_;
  QVec values_;
};

Rat eval(const SetFunction& f, Mask A);

// f(A||B) = f(A u B) - f(B)
Rat cond(const SetFunction& f, Mask A, Mask B);

// f(A,B) = f(A) + f(B) - f(A u B)
Rat mi(const SetFunction& f, Mask A, Mask B);

// f(A,B||C) = f(AC) + f(BC) - f(ABC) - f(C)
Rat cmi(const SetFunction& f, Mask A, Mask B, Mask C);

SetFunction add(const SetFunction& f, const SetFunction& g);
SetFunction scale(const SetFunction& f, const Rat& c);
inline SetFunction operator+(const SetFunction& f, const SetFunction& g) {
  return add(f, g);
}

// Pointed modular function with the given singleton weights.
SetFunction modular(const GroundSet& g, const std::vector<Rat>& weights);

AxiomReport check_axioms(const SetFunction& f, const AxiomScanOptions& opt = {});
bool is_polymatroid(const SetFunction& f);
bool is_monotone(const SetFunction& f);

// True iff some A avoiding a has h(A u {a}) != h(A).
bool depends_on(const SetFunction& h, int a);

// max_b f({b}) / f({a}); b = a is allowed, so the result is >= 1.
// Throws std::domain_error when f({a}) = 0.
Rat c_ratio(const SetFunction& f, int a);

}  // namespace polymat
