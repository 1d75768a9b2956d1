#pragma once

#include <stdexcept>
#include <vector>

#include "polymat/rational.hpp"

namespace polymat::linalg {

struct Int64Overflow : std::overflow_error {
  Int64Overflow() : std::overflow_error("int64 overflow in exact elimination") {}
};

// Exact integer rank via fraction-free (Bareiss) elimination. The IMat
// overload throws Int64Overflow when intermediates outgrow 64 bits; callers
// that cannot bound their minors use the ZMat overload or rank_exact_auto.
int rank_exact(IMat m);
int rank_exact(ZMat m);
int rank_exact_auto(const IMat& m);

// Rank over F_p with p = 2^31 - 1 (fixed). Never exceeds the rational rank,
// so matching a known upper bound certifies the exact value.
inline constexpr std::int64_t kRankPrime = 2147483647;
int rank_mod_p(IMat m);

// Gauss-Jordan inverse over Q; throws std::domain_error when singular.
QMat inverse(QMat m);

// Kernel basis over Q, each vector cleared to a primitive integer vector with
// its first nonzero entry positive. Deterministic.
std::vector<ZVec> kernel(QMat m);

}  // namespace polymat::linalg
