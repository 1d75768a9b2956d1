#pragma once

#include "polymat/rational.hpp"

namespace polymat {

// Rigorous dyadic bracket lower <= log2(n) <= upper with denominator
// 2^frac_bits, computed by integer square-and-shift with directed rounding.
struct Log2Bracket {
  Rat lower;
  Rat upper;
};

Log2Bracket log2_bracket(unsigned long n, unsigned frac_bits = 64);

}  // namespace polymat
