#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polymat/mask.hpp"
#include "polymat/rational.hpp"

namespace polymat {

enum class AxiomKind { Pointed, B1, B2 };

struct AxiomViolation {
  AxiomKind kind;
  int i = -1;        // B1 element
  int a = -1;        // B2 pair
  int b = -1;
  Mask K = 0;        // B2 condition set
  Rat value;
  std::string describe(const GroundSet& g) const;
};

struct AxiomScanOptions {
  enum class Mode { Auto, Full, Sampled };
  Mode mode = Mode::Auto;
  std::uint64_t sample_budget = 100000;  // B2 rows drawn in sampled mode
  std::uint64_t seed = 0;
  std::size_t max_violations = 64;
};

struct AxiomReport {
  bool pointed = false;
  bool b1_ok = false;
  bool b2_ok = false;
  bool sampled = false;
  std::uint64_t rows_checked = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return pointed && b1_ok && b2_ok; }
};

// Full scan is n(n-1)/2 * 2^(n-2) B2 rows; beyond this ground size the Auto
// mode falls back to random sampling.
inline constexpr int kFullScanMaxGround = 14;

// Checks the pointedness equality, the n final marginals and the conditional
// pair rows against an arbitrary evaluator f : Mask -> value. The value type
// may be any exactly ordered arithmetic type (Rat, long, ...); lazy oracles
// pass integer evaluators to avoid rational overhead.
template <class F>
AxiomReport scan_axioms(const GroundSet& g, F&& f,
                        const AxiomScanOptions& opt = {}) {
  // Materialized value type; expression templates of value-returning
  // evaluators must not outlive their operands.
  using Raw = std::decay_t<std::invoke_result_t<F, Mask>>;
  using V = std::conditional_t<std::is_integral_v<Raw>, long, Rat>;

  const int n = g.size();
  const Mask full = g.full();
  AxiomReport rep;

  auto note = [&](AxiomViolation v) {
    if (rep.violations.size() < opt.max_violations)
      rep.violations.push_back(std::move(v));
  };

  {
    const V v0 = f(Mask{0});
    rep.pointed = (v0 == 0);
    if (!rep.pointed)
      note({AxiomKind::Pointed, -1, -1, -1, 0, Rat(v0)});
  }

  rep.b1_ok = rep.pointed;
  for (int i = 0; i < n; ++i) {
    V m = f(full);
    m -= f(full ^ elem_bit(i));
    ++rep.rows_checked;
    if (m < 0) {
      rep.b1_ok = false;
      note({AxiomKind::B1, i, -1, -1, 0, Rat(m)});
    }
  }

  const bool full_scan =
      opt.mode == AxiomScanOptions::Mode::Full ||
      (opt.mode == AxiomScanOptions::Mode::Auto && n <= kFullScanMaxGround);

  rep.b2_ok = true;
  auto check_b2 = [&](int a, int b, Mask K) {
    V v = f(K | elem_bit(a));
    v += f(K | elem_bit(b));
    v -= f(K | elem_bit(a) | elem_bit(b));
    v -= f(K);
    ++rep.rows_checked;
    if (v < 0) {
      rep.b2_ok = false;
      note({AxiomKind::B2, -1, a, b, K, Rat(v)});
    }
  };

  if (full_scan) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for_each_submask(full ^ elem_bit(a) ^ elem_bit(b),
                         [&](Mask K) { check_b2(a, b, K); });
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::uint64_t t = 0; t < opt.sample_budget; ++t) {
      int a = pick(rng);
      int b = pick(rng);
      while (b == a) b = pick(rng);
      if (a > b) std::swap(a, b);
      Mask K = static_cast<Mask>(rng()) & (full ^ elem_bit(a) ^ elem_bit(b));
      check_b2(a, b, K);
    }
  }
  return rep;
}

}  // namespace polymat
