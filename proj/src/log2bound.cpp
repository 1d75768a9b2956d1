#include "polymat/log2bound.hpp"

#include <stdexcept>

namespace polymat {

namespace {

// One directed-rounding digit extraction chain. The mantissa m tracks a
// number in [1,2) scaled by 2^guard; squaring doubles it into [1,4), and the
// emitted bit records whether a halving was needed. Floor rounding keeps m a
// lower bound of the exact chain, ceiling an upper bound; either way the
// emitted bits bracket the fractional part of log2.
Int digit_chain(const Int& start, unsigned frac_bits, unsigned guard,
                bool round_up) {
  Int m = start;
  Int bits = 0;
  const Int one = pow2(guard);
  const Int two = pow2(guard + 1);
  for (unsigned t = 0; t < frac_bits; ++t) {
    Int sq = m * m;
    if (round_up) sq += one - 1;
    m = sq >> guard;
    bits <<= 1;
    if (m >= two) {
      m >>= 1;
      bits |= 1;
    }
  }
  return bits;
}

}  // namespace

Log2Bracket log2_bracket(unsigned long n, unsigned frac_bits) {
  if (n < 1) throw std::domain_error("log2 of non-positive number");
  if (frac_bits < 1 || frac_bits > 256)
    throw std::invalid_argument("frac_bits out of range");

  Int nz(static_cast<long>(n));
  const unsigned e =
      static_cast<unsigned>(mpz_sizeinbase(nz.get_mpz_t(), 2)) - 1;

  Log2Bracket out;
  const Int den = pow2(frac_bits);
  if ((nz >> e) << e == nz && (nz >> e) == 1) {  // exact power of two
    out.lower = Rat(Int(e));
    out.upper = out.lower;
    return out;
  }

  const unsigned guard = frac_bits + 64;
  Int start = nz << (guard - e);  // n / 2^e scaled by 2^guard, exact

  Int lo_bits = digit_chain(start, frac_bits, guard, /*round_up=*/false);
  Int hi_bits = digit_chain(start, frac_bits, guard, /*round_up=*/true) + 1;

  out.lower = Rat(Int(e) * den + lo_bits, den);
  out.lower.canonicalize();
  out.upper = Rat(Int(e) * den + hi_bits, den);
  out.upper.canonicalize();
  return out;
}

}  // namespace polymat
