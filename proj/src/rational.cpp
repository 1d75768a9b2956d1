#include "polymat/rational.hpp"

#include <cctype>

namespace polymat {

Rat parse_rat(const std::string& token) {
  if (token.empty())
    throw std::invalid_argument("empty rational token");
  // Reject whitespace and other noise that mpq_set_str would tolerate.
  for (char c : token) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/'))
      throw std::invalid_argument("malformed rational '" + token + "'");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), token.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational '" + token + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in '" + token + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

long to_long_checked(const Int& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer does not fit a machine long");
  return z.get_si();
}

}  // namespace polymat
