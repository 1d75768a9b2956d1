#include "polymat/axioms.hpp"

namespace polymat {

std::string AxiomViolation::describe(const GroundSet& g) const {
  switch (kind) {
    case AxiomKind::Pointed:
      return "pointed: f({}) = " + to_string(value);
    case AxiomKind::B1:
      return "B1(" + g.label(i) + ") = " + to_string(value);
    case AxiomKind::B2:
      return "B2(" + g.label(a) + "," + g.label(b) + "|" + g.subset_name(K) +
             ") = " + to_string(value);
  }
  return "?";
}

}  // namespace polymat
