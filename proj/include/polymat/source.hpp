#pragma once

#include <cstdint>
#include <vector>

#include "polymat/mask.hpp"
#include "polymat/rational.hpp"
#include "polymat/setfn.hpp"

namespace polymat {

// Jointly uniform GF(2) random bits: each ground element observes a list of
// linear functions of the hidden bits. The entropy of any subset equals the
// GF(2) rank of its stacked vectors, so the rank function is an exact
// integer-valued polymatroid.
struct LinearSource {
  GroundSet ground;
  int dim = 0;                                     // ambient bit dimension
  std::vector<std::vector<std::uint64_t>> rows;    // per element, nonzero vectors
};

// Ground set {a} u X u Y with |X| = k, |Y| = 2^k.
struct ConstructionParams {
  int k = 2;
};

// All subsets of {1..k} as k-bit masks, by decreasing cardinality, ties by
// decreasing mask value. First entry is the full set, last is empty, and an
// earlier entry is never a subset of a later one.
std::vector<Mask> subset_order(int k);

// Index bookkeeping for the construction's ground set and bit space.
struct ConstructionLayout {
  int k = 0;
  int n = 0;    // 1 + k + 2^k
  int dim = 0;  // 2^k
  std::vector<Mask> order;  // subset_order(k)

  int a() const { return 0; }
  int x(int i) const { return i; }            // 1 <= i <= k
  int y(int t) const { return 1 + k + t; }    // 0 <= t < 2^k

  // X_J as a ground-set mask, J a k-bit mask over {1..k}.
  Mask x_set(Mask J) const;
  Mask x_at(int t) const { return x_set(order.at(t)); }   // X_t
  Mask y_prefix(int t) const;                              // {y_0..y_t}
};

ConstructionLayout construction_layout(const ConstructionParams& p);

// One hidden bit for a; 2^(i-1) hidden bits for x_i; and for each subset K of
// {1..k} a single observed bit on y_K that xors a's bit with one bit of every
// x_j, j in K.
LinearSource build_source(const ConstructionParams& p);

// GF(2) rank of the vectors owned by the elements of A.
int rank_value(const LinearSource& src, Mask A);

// Dense rank table for an arbitrary source (subject to the dense cap).
SetFunction rank_function(const LinearSource& src);

// Dense table for the construction; requires 1 + k + 2^k <= dense cap.
SetFunction build_polymatroid(const ConstructionParams& p);

// Independent entropy oracle: enumerates all 2^dim assignments of the hidden
// bits and counts distinct observation tuples on A. Requires dim <= 16.
Rat brute_entropy(const LinearSource& src, Mask A);

struct ConditionsReport {
  int k = 0;
  int n = 0;
  bool cond_i = false;       // f(a || X_i y_i) = 0 for all i
  bool cond_ii = false;      // f(a || X_i Y_{i-1}) = f(a) for all i >= 1
  long f_of_x = 0;           // f(X)
  Rat c_ratio;               // max_b f(b)/f(a)
  Rat x_bound;               // (2^k - 1)/k
  Rat growth_threshold;      // rational upper estimate of n/(2 log2 n)
  bool bound_holds = false;  // c_ratio >= x_bound and x_bound > threshold
  bool ok() const { return cond_i && cond_ii && bound_holds; }
};

// Lazy verification through the rank oracle; no dense table is built, so any
// k >= 2 with n <= 31 works.
ConditionsReport verify_conditions(const ConstructionParams& p);

}  // namespace polymat
