#include "polymat/linalg.hpp"

namespace polymat::linalg {

namespace {

inline std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow();
  return r;
}

inline std::int64_t sub_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow();
  return r;
}

// Bareiss elimination with column skipping; every intermediate entry is a
// minor of the input, so the division is exact.
template <class Mat, class Div>
int bareiss_rank(Mat& m, Div div, auto mul, auto sub) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  typename Mat::Scalar prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(i, j) = div(sub(mul(m(r, c), m(i, j)), mul(m(i, c), m(r, j))), prev);
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank_exact(IMat m) {
  return bareiss_rank(
      m,
      [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if (q * b != a) throw std::logic_error("inexact Bareiss division");
        return q;
      },
      mul_ck, sub_ck);
}

int rank_exact(ZMat m) {
  return bareiss_rank(
      m,
      [](const Int& a, const Int& b) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
      },
      [](const Int& a, const Int& b) { return Int(a * b); },
      [](const Int& a, const Int& b) { return Int(a - b); });
}

int rank_exact_auto(const IMat& m) {
  try {
    return rank_exact(m);
  } catch (const Int64Overflow&) {
    ZMat z(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        z(i, j) = static_cast<long>(m(i, j));
    return rank_exact(std::move(z));
  }
}

int rank_mod_p(IMat m) {
  constexpr std::int64_t p = kRankPrime;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      std::int64_t v = m(i, j) % p;
      m(i, j) = v < 0 ? v + p : v;
    }

  auto powmod = [&](std::int64_t base, std::int64_t e) {
    std::int64_t acc = 1;
    while (e > 0) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return acc;
  };

  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    const std::int64_t inv = powmod(m(r, c), p - 2);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const std::int64_t factor = m(i, c) * inv % p;
      for (Eigen::Index j = c; j < cols; ++j) {
        std::int64_t v = (m(i, j) - factor * m(r, j)) % p;
        m(i, j) = v < 0 ? v + p : v;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

QMat inverse(QMat m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  QMat aug(n, 2 * n);
  aug.setZero();
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = 1;

  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (aug(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) throw std::domain_error("inverse: singular matrix");
    if (pr != c) aug.row(pr).swap(aug.row(c));
    const Rat piv = aug(c, c);
    for (Eigen::Index j = c; j < 2 * n; ++j) aug(c, j) /= piv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Rat factor = aug(i, c);
      for (Eigen::Index j = c; j < 2 * n; ++j)
        aug(i, j) -= factor * aug(c, j);
    }
  }
  return aug.rightCols(n);
}

std::vector<ZVec> kernel(QMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    const Rat piv = m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= piv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  std::vector<ZVec> basis;
  for (Eigen::Index fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    QVec x(cols);
    x.setZero();
    x[fc] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      x[pivot_col[i]] = -m(static_cast<Eigen::Index>(i), fc);

    Int lcm(1);
    for (Eigen::Index j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x[j].get_den_mpz_t());
    ZVec z(cols);
    Int gcd(0);
    for (Eigen::Index j = 0; j < cols; ++j) {
      Rat scaled = x[j] * Rat(lcm);
      scaled.canonicalize();
      z[j] = scaled.get_num();
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z[j].get_mpz_t());
    }
    if (gcd > 1)
      for (Eigen::Index j = 0; j < cols; ++j)
        mpz_divexact(z[j].get_mpz_t(), z[j].get_mpz_t(), gcd.get_mpz_t());
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (z[j] == 0) continue;
      if (z[j] < 0) z = -z;
      break;
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace polymat::linalg
