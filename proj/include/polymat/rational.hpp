#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polymat {

// Exact scalars. mpq_class keeps every value canonical (reduced fraction,
// positive denominator), which equality tests and the file format rely on.
using Rat = mpq_class;
using Int = mpz_class;

// Parses an integer or "p/q" token. Throws std::invalid_argument on malformed
// input or zero denominator.
Rat parse_rat(const std::string& token);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Throws std::overflow_error if z does not fit a long.
long to_long_checked(const Int& z);

}  // namespace polymat

// Just enough NumTraits for Eigen dense containers of exact scalars.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return mpq_class(0); }
  static inline Real dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 64,
    MulCost = 64,
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return mpz_class(0); }
  static inline Real dummy_precision() { return mpz_class(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 32,
  };
};

}  // namespace Eigen

namespace polymat {

using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace polymat
