#pragma once

// Test-only generators: deterministic, seed-driven inputs for property tests.

#include <random>

#include "polymat/cone.hpp"
#include "polymat/setfn.hpp"
#include "polymat/source.hpp"

namespace testgen {

using polymat::GroundSet;
using polymat::LinearSource;
using polymat::Mask;
using polymat::QVec;
using polymat::Rat;
using polymat::SetFunction;

using Rng = std::mt19937_64;

// min(|A|, k) -- uniform matroid rank, a polymatroid for any 0 <= k <= n.
inline SetFunction uniform_matroid(const GroundSet& g, int k) {
  QVec v(g.table_size());
  for (Mask A = 0; A <= g.full(); ++A)
    v[A] = std::min(polymat::popcount(A), k);
  return SetFunction(g, std::move(v));
}

// min(|A & S|, k) -- rank of a partition-style matroid.
inline SetFunction masked_matroid(const GroundSet& g, Mask S, int k) {
  QVec v(g.table_size());
  for (Mask A = 0; A <= g.full(); ++A)
    v[A] = std::min(polymat::popcount(A & S), k);
  return SetFunction(g, std::move(v));
}

inline Rat random_nonneg_rat(Rng& rng, long num_max = 8, long den_max = 4) {
  std::uniform_int_distribution<long> num(0, num_max), den(1, den_max);
  return polymat::rat(num(rng), den(rng));
}

inline SetFunction random_modular(const GroundSet& g, Rng& rng) {
  std::vector<Rat> w;
  for (int i = 0; i < g.size(); ++i) w.push_back(random_nonneg_rat(rng));
  return modular(g, w);
}

// Arbitrary rational table; generally not a polymatroid.
inline SetFunction random_table(const GroundSet& g, Rng& rng) {
  std::uniform_int_distribution<long> num(-8, 8), den(1, 5);
  QVec v(g.table_size());
  for (Mask A = 0; A <= g.full(); ++A) v[A] = polymat::rat(num(rng), den(rng));
  return SetFunction(g, std::move(v));
}

inline LinearSource random_source(const GroundSet& g, int dim, Rng& rng) {
  std::uniform_int_distribution<int> nvec(1, 2);
  std::uniform_int_distribution<std::uint64_t> vec(
      1, (std::uint64_t{1} << dim) - 1);
  LinearSource src{g, dim, {}};
  src.rows.resize(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const int cnt = nvec(rng);
    for (int t = 0; t < cnt; ++t) src.rows[i].push_back(vec(rng));
  }
  return src;
}

// Conic combination of simple polymatroids: a polymatroid by closure.
inline SetFunction random_polymatroid(const GroundSet& g, Rng& rng) {
  SetFunction acc = random_modular(g, rng);
  std::uniform_int_distribution<int> pieces(1, 3);
  std::uniform_int_distribution<Mask> subset(0, g.full());
  std::uniform_int_distribution<int> rank(1, std::max(1, g.size() - 1));
  const int cnt = pieces(rng);
  for (int t = 0; t < cnt; ++t) {
    Mask S = subset(rng);
    if (S == 0) S = g.full();
    acc = add(acc, scale(masked_matroid(g, S, rank(rng)),
                         random_nonneg_rat(rng, 5, 3)));
  }
  return acc;
}

// Conic combination of enumerated extreme rays with small rational weights.
inline SetFunction random_conic(const GroundSet& g,
                                const std::vector<polymat::Ray>& rays,
                                Rng& rng, int terms = 4) {
  SetFunction acc = SetFunction::zero(g);
  std::uniform_int_distribution<std::size_t> pick(0, rays.size() - 1);
  for (int t = 0; t < terms; ++t)
    acc = add(acc, scale(rays[pick(rng)].to_setfn(g),
                         random_nonneg_rat(rng, 4, 3)));
  return acc;
}

}  // namespace testgen
