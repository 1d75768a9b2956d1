#include "polymat/cone.hpp"

#include <algorithm>

#include "polymat/linalg.hpp"
#include "polymat/simplex.hpp"

namespace polymat {

std::string ShannonRow::describe(const GroundSet& g) const {
  switch (kind) {
    case AxiomKind::Pointed:
      return "pointed";
    case AxiomKind::B1:
      return "B1(" + g.label(i) + ")";
    case AxiomKind::B2:
      return "B2(" + g.label(a) + "," + g.label(b) + "|" + g.subset_name(K) +
             ")";
  }
  return "?";
}

ShannonSystem shannon_system(const GroundSet& g) {
  const int n = g.size();
  if (n < 2) throw std::invalid_argument("shannon_system: need n >= 2");
  if (n > kFullScanMaxGround)
    throw std::length_error("shannon_system: materialized rows capped at n = " +
                            std::to_string(kFullScanMaxGround));
  ShannonSystem sys{g, {}, 0, 0};
  const Mask full = g.full();

  for (int i = 0; i < n; ++i) {
    ShannonRow row;
    row.kind = AxiomKind::B1;
    row.i = i;
    row.terms[0] = {full, +1};
    row.terms[1] = {full ^ elem_bit(i), -1};
    row.nterms = 2;
    sys.rows.push_back(row);
    ++sys.b1_count;
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Mask rest = full ^ elem_bit(a) ^ elem_bit(b);
      for (Mask K = 0;; K = ((K | ~rest) + 1) & rest) {  // submasks ascending
        ShannonRow row;
        row.kind = AxiomKind::B2;
        row.a = a;
        row.b = b;
        row.K = K;
        row.terms[0] = {K | elem_bit(a), +1};
        row.terms[1] = {K | elem_bit(b), +1};
        row.terms[2] = {K | elem_bit(a) | elem_bit(b), -1};
        row.terms[3] = {K, -1};
        row.nterms = 4;
        sys.rows.push_back(row);
        ++sys.b2_count;
        if (K == rest) break;
      }
    }

  ShannonRow pointed;
  pointed.kind = AxiomKind::Pointed;
  pointed.terms[0] = {Mask{0}, +1};
  pointed.nterms = 1;
  sys.rows.push_back(pointed);
  return sys;
}

ShannonSystem shannon_system(int n) { return shannon_system(GroundSet(n)); }

std::vector<int> tight_set(const ShannonSystem& sys, const SetFunction& f) {
  if (!(sys.ground == f.ground()))
    throw std::invalid_argument("tight_set: mismatched ground sets");
  if (!is_polymatroid(f))
    throw std::domain_error("tight_set: input is not a polymatroid");
  std::vector<int> out;
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    if (sys.rows[r].eval(f) == 0) out.push_back(static_cast<int>(r));
  return out;
}

std::vector<int> tight_set(const SetFunction& f) {
  return tight_set(shannon_system(f.ground()), f);
}

bool is_extremal(const ShannonSystem& sys, const SetFunction& f) {
  bool all_zero = true;
  for (Eigen::Index i = 0; i < f.values().size() && all_zero; ++i)
    all_zero = (f.values()[i] == 0);
  if (all_zero) throw std::domain_error("is_extremal: zero function");
  const auto tight = tight_set(sys, f);  // validates polymatroid input
  const Eigen::Index dim = static_cast<Eigen::Index>(f.ground().table_size());
  const int want = static_cast<int>(dim) - 1;

  IMat m(static_cast<Eigen::Index>(tight.size()), dim);
  m.setZero();
  for (std::size_t r = 0; r < tight.size(); ++r) {
    const ShannonRow& row = sys.rows[tight[r]];
    for (int t = 0; t < row.nterms; ++t)
      m(static_cast<Eigen::Index>(r), row.terms[t].first) +=
          row.terms[t].second;
  }
  // The tight rows annihilate f != 0, so their rank never exceeds 2^n - 1 and
  // the mod-p value certifies equality; fall back to exact rank otherwise.
  if (linalg::rank_mod_p(m) == want) return true;
  return linalg::rank_exact_auto(m) == want;
}

bool is_extremal(const SetFunction& f) {
  return is_extremal(shannon_system(f.ground()), f);
}

int Ray::n() const {
  int bits = 0;
  while ((Eigen::Index{1} << bits) < values.size()) ++bits;
  return bits;
}

SetFunction Ray::to_setfn() const { return to_setfn(GroundSet(n())); }

SetFunction Ray::to_setfn(const GroundSet& g) const {
  if (static_cast<Eigen::Index>(g.table_size()) != values.size())
    throw std::invalid_argument("ray size does not match ground set");
  QVec v(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) v[i] = Rat(values[i]);
  return SetFunction(g, std::move(v));
}

Rat lambda_from_rays(const std::vector<Ray>& rays, int anchor) {
  Rat best = 0;
  const Mask am = elem_bit(anchor);
  for (const Ray& e : rays) {
    const Int& ea = e.values[am];
    if (ea == 0) continue;
    const int n = e.n();
    for (int b = 0; b < n; ++b) {
      Rat r(e.values[elem_bit(b)], ea);
      r.canonicalize();
      if (r > best) best = r;
    }
  }
  return best;
}

Rat lambda(int n, const EnumOptions& opt) {
  EnumResult res = enumerate_rays(n, opt);
  if (!res.complete)
    throw std::domain_error("lambda: ray enumeration incomplete within budget");
  return lambda_from_rays(res.rays, 0);
}

bool lambda_anchor_invariant(const std::vector<Ray>& rays) {
  if (rays.empty()) return true;
  const int n = rays.front().n();
  const Rat ref = lambda_from_rays(rays, 0);
  for (int a = 1; a < n; ++a)
    if (lambda_from_rays(rays, a) != ref) return false;
  return true;
}

HadamardBound hadamard_bound(int n) {
  if (n < 2) throw std::invalid_argument("hadamard_bound: need n >= 2");
  if (n > 26) throw std::length_error("hadamard_bound: exponent too large");
  HadamardBound hb;
  const unsigned long d = (1UL << n);
  hb.proved = pow2(d - 1);
  hb.tightened = pow2(d - static_cast<unsigned long>(n) - 2);
  return hb;
}

ConicCombination conic_decompose(const SetFunction& f,
                                 const std::vector<Ray>& rays) {
  if (!is_polymatroid(f))
    throw std::domain_error("conic_decompose: input is not a polymatroid");
  const Eigen::Index table = static_cast<Eigen::Index>(f.ground().table_size());
  for (const Ray& e : rays)
    if (e.values.size() != table)
      throw std::invalid_argument("conic_decompose: ray size mismatch");

  LpInstance lp;
  lp.nvars = static_cast<Eigen::Index>(rays.size());
  lp.objective = QVec::Zero(lp.nvars);
  for (Mask A = 1; A < static_cast<Mask>(table); ++A) {
    LpRow row;
    row.coeffs = QVec(lp.nvars);
    for (Eigen::Index j = 0; j < lp.nvars; ++j)
      row.coeffs[j] = Rat(rays[j].values[A]);
    row.sense = Sense::Eq;
    row.rhs = f(A);
    lp.rows.push_back(std::move(row));
  }

  const LpResult res = exact_lp_max(lp);
  if (res.status != LpStatus::Optimal)
    throw std::domain_error(
        "conic_decompose: infeasible (ray list incomplete or input outside "
        "the cone)");

  ConicCombination out;
  for (Eigen::Index j = 0; j < lp.nvars; ++j)
    if (res.x[j] != 0) out.terms.emplace_back(static_cast<std::size_t>(j),
                                              res.x[j]);
  return out;
}

}  // namespace polymat
