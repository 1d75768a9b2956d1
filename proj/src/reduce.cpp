#include "polymat/reduce.hpp"

#include <stdexcept>

#include "polymat/cone.hpp"

namespace polymat {

namespace {

// Compress a subset of N \ {a} to a mask over n-1 bits.
Mask squeeze(Mask A, int a) {
  const Mask low = A & (elem_bit(a) - 1);
  const Mask high = A >> (a + 1);
  return low | (high << a);
}

void check_preconditions(const SetFunction& f, int a) {
  if (a < 0 || a >= f.n())
    throw std::invalid_argument("reduce: element index out of range");
  if (f.n() > kReduceCap)
    throw std::length_error("reduce: ground set exceeds LP cap (" +
                            std::to_string(kReduceCap) + ")");
  if (!is_polymatroid(f))
    throw std::domain_error("reduce: input is not a polymatroid");
  if (f(elem_bit(a)) == 0)
    throw std::domain_error("reduce: f(" + f.ground().label(a) +
                            ") = 0, reduction target degenerate");
}

}  // namespace

LpInstance build_reduce_lp(const SetFunction& f, int a) {
  check_preconditions(f, a);
  const int n = f.n();
  const int nr = n - 1;

  // Variable var(A) = h(A) for nonempty A over the reduced ground set,
  // indexed by squeezed mask minus one.
  const Eigen::Index nvars = (Eigen::Index{1} << nr) - 1;
  auto var_of = [&](Mask squeezed) -> Eigen::Index {
    return static_cast<Eigen::Index>(squeezed) - 1;
  };

  LpInstance lp;
  lp.nvars = nvars;

  // h must be a polymatroid on N \ {a}: its axiom rows, negated into <= 0.
  if (nr == 1) {
    LpRow out;  // the lone marginal h(b) >= 0
    out.coeffs = QVec::Zero(nvars);
    out.coeffs[0] = -1;
    out.sense = Sense::Le;
    out.rhs = 0;
    lp.rows.push_back(std::move(out));
  } else {
    const ShannonSystem sub = shannon_system(GroundSet(nr));
    for (const ShannonRow& row : sub.rows) {
      if (row.kind == AxiomKind::Pointed) continue;  // h(empty) = 0 structural
      LpRow out;
      out.coeffs = QVec::Zero(nvars);
      for (int t = 0; t < row.nterms; ++t) {
        const auto [mask, coeff] = row.terms[t];
        if (mask == 0) continue;
        out.coeffs[var_of(mask)] -= coeff;
      }
      out.sense = Sense::Le;
      out.rhs = 0;
      lp.rows.push_back(std::move(out));
    }
  }

  // g = f - h~ must be a polymatroid on N: row(h~) <= row(f). Terms touching
  // a collapse onto the a-free part; rows where everything cancels hold for
  // free because f is a polymatroid.
  const ShannonSystem full = shannon_system(f.ground());
  for (const ShannonRow& row : full.rows) {
    if (row.kind == AxiomKind::Pointed) continue;
    LpRow out;
    out.coeffs = QVec::Zero(nvars);
    bool nonzero = false;
    for (int t = 0; t < row.nterms; ++t) {
      const auto [mask, coeff] = row.terms[t];
      const Mask dropped = squeeze(mask & ~elem_bit(a), a);
      if (dropped == 0) continue;
      out.coeffs[var_of(dropped)] += coeff;
    }
    for (Eigen::Index j = 0; j < nvars && !nonzero; ++j)
      nonzero = (out.coeffs[j] != 0);
    if (!nonzero) continue;
    out.sense = Sense::Le;
    out.rhs = row.eval(f);
    lp.rows.push_back(std::move(out));
  }

  lp.objective = QVec::Zero(nvars);
  lp.objective[nvars - 1] = 1;  // h(N \ {a})
  return lp;
}

Decomposition reduce(const SetFunction& f, int a) {
  const LpInstance lp = build_reduce_lp(f, a);
  const LpResult res = exact_lp_max(lp);
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("reduce: LP must be feasible and bounded");

  const GroundSet& g = f.ground();
  QVec hv(g.table_size());
  for (Mask A = 0; A <= g.full(); ++A) {
    const Mask dropped = squeeze(A & ~elem_bit(a), a);
    hv[A] = dropped == 0 ? Rat(0) : res.x[dropped - 1];
  }
  SetFunction h(g, std::move(hv));
  QVec gv = f.values() - h.values();
  return Decomposition{SetFunction(g, std::move(gv)), std::move(h)};
}

bool is_a_reduced(const SetFunction& f, int a) {
  const LpResult res = exact_lp_max(build_reduce_lp(f, a));
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("reduce: LP must be feasible and bounded");
  return res.optimum == 0;
}

}  // namespace polymat
