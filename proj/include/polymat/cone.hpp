#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <type_traits>
#include <vector>

#include "polymat/axioms.hpp"
#include "polymat/mask.hpp"
#include "polymat/rational.hpp"
#include "polymat/setfn.hpp"

namespace polymat {

// One Shannon axiom row: at most four +-1 coefficients over the 2^n function
// values. B1 rows are final marginals, B2 rows conditional pair informations,
// plus the single pointedness equality.
struct ShannonRow {
  AxiomKind kind = AxiomKind::B2;
  int i = -1;            // B1 element
  int a = -1, b = -1;    // B2 pair
  Mask K = 0;            // B2 condition set
  std::array<std::pair<Mask, int>, 4> terms{};  // (subset mask, coefficient)
  int nterms = 0;

  // Coefficients are always +-1, so evaluation is pure addition.
  template <class F>
  auto eval_with(F&& f) const {
    using Raw = std::decay_t<std::invoke_result_t<F, Mask>>;
    using V = std::conditional_t<std::is_integral_v<Raw>, long, Rat>;
    V acc{};
    for (int t = 0; t < nterms; ++t) {
      if (terms[t].second > 0)
        acc += f(terms[t].first);
      else
        acc -= f(terms[t].first);
    }
    return acc;
  }
  Rat eval(const SetFunction& f) const {
    return eval_with([&](Mask m) -> const Rat& { return f(m); });
  }
  std::string describe(const GroundSet& g) const;
};

struct ShannonSystem {
  GroundSet ground;
  std::vector<ShannonRow> rows;  // B1 by i, then B2 by (a,b) then K, pointed last
  int b1_count = 0;
  std::size_t b2_count = 0;
  std::size_t pointed_index() const { return rows.size() - 1; }
};

// Materialized row set; 2 <= n <= 14 (row count grows as C(n,2) 2^(n-2)).
ShannonSystem shannon_system(const GroundSet& g);
ShannonSystem shannon_system(int n);

// Ids of all rows that hold with equality on f. The pointedness row is always
// present. Requires a polymatroid input.
std::vector<int> tight_set(const ShannonSystem& sys, const SetFunction& f);
std::vector<int> tight_set(const SetFunction& f);

// A nonzero polymatroid spans an extreme ray iff its tight rows have rational
// rank 2^n - 1.
bool is_extremal(const ShannonSystem& sys, const SetFunction& f);
bool is_extremal(const SetFunction& f);

// Canonical primitive extreme ray: 2^n nonnegative integers, gcd 1.
struct Ray {
  ZVec values;
  int n() const;
  SetFunction to_setfn() const;
  SetFunction to_setfn(const GroundSet& g) const;
  bool operator==(const Ray& other) const {
    if (values.size() != other.values.size()) return false;
    for (Eigen::Index i = 0; i < values.size(); ++i)
      if (values[i] != other.values[i]) return false;
    return true;
  }
};

struct EnumOptions {
  int threads = 1;
  double budget_seconds = 0;  // 0 = unlimited
  bool verify = false;        // recheck every output ray (polymatroid + extremal)
  bool use_big_integers = false;  // skip the checked int64 fast path
  std::ostream* progress = nullptr;
};

struct EnumResult {
  int n = 0;
  bool complete = false;
  // Canonically sorted (lexicographic by value table). On a budgeted partial
  // run this holds only rays individually verified against the full system.
  std::vector<Ray> rays;
};

// Double description enumeration of the polymatroid cone, 2 <= n <= 5.
// Output is deterministic and independent of the thread count.
EnumResult enumerate_rays(int n, const EnumOptions& opt = {});

// max over rays e with e({anchor}) > 0 of max_b e({b}) / e({anchor}).
Rat lambda_from_rays(const std::vector<Ray>& rays, int anchor = 0);

// Anchor fixed to element 0; the axiom system is permutation symmetric.
Rat lambda(int n, const EnumOptions& opt = {});

// Debug path: true iff the anchored maximum agrees for every anchor choice.
bool lambda_anchor_invariant(const std::vector<Ray>& rays);

struct HadamardBound {
  Int proved;     // 2^(2^n - 1)
  Int tightened;  // 2^(2^n - n - 2), reported constant, not re-derived here
};
HadamardBound hadamard_bound(int n);

struct ConicCombination {
  std::vector<std::pair<std::size_t, Rat>> terms;  // (ray index, coefficient)
};

// Exact nonnegative coefficients with sum_i mu_i e_i = f. Throws
// std::domain_error when infeasible (incomplete ray list or f outside the
// cone).
ConicCombination conic_decompose(const SetFunction& f,
                                 const std::vector<Ray>& rays);

}  // namespace polymat
