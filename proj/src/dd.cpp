#include <algorithm>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "polymat/cone.hpp"
#include "polymat/linalg.hpp"

// Double description enumeration of {f : (B1), (B2)} in the 2^n - 1
// coordinates with f(empty) eliminated. The scalar type is templated: the
// int64 instantiation carries overflow checks and the driver falls back to
// GMP integers if they ever fire.

namespace polymat {

namespace {

struct BudgetExceeded {};

struct Bits128 {
  std::uint64_t w0 = 0, w1 = 0;
  void set(int i) {
    if (i < 64)
      w0 |= std::uint64_t{1} << i;
    else
      w1 |= std::uint64_t{1} << (i - 64);
  }
  friend Bits128 operator&(const Bits128& x, const Bits128& y) {
    return {x.w0 & y.w0, x.w1 & y.w1};
  }
  int count() const { return std::popcount(w0) + std::popcount(w1); }
  template <class F>
  void for_each(F&& f) const {
    std::uint64_t a = w0;
    while (a) {
      f(std::countr_zero(a));
      a &= a - 1;
    }
    std::uint64_t b = w1;
    while (b) {
      f(64 + std::countr_zero(b));
      b &= b - 1;
    }
  }
};

template <class T>
struct Ops;

template <>
struct Ops<std::int64_t> {
  using V = std::int64_t;
  static V mul(V a, V b) {
    V r;
    if (__builtin_mul_overflow(a, b, &r)) throw linalg::Int64Overflow();
    return r;
  }
  static V sub(V a, V b) {
    V r;
    if (__builtin_sub_overflow(a, b, &r)) throw linalg::Int64Overflow();
    return r;
  }
  static V add(V a, V b) {
    V r;
    if (__builtin_add_overflow(a, b, &r)) throw linalg::Int64Overflow();
    return r;
  }
  static int sign(V a) { return (a > 0) - (a < 0); }
  static V abs_gcd(V g, V v) {
    if (v == std::numeric_limits<V>::min()) throw linalg::Int64Overflow();
    return std::gcd(g, v);
  }
  static void divexact(V& a, V g) { a /= g; }
  static V from_mpz(const Int& z) {
    if (!z.fits_slong_p()) throw linalg::Int64Overflow();
    return z.get_si();
  }
  static Int to_mpz(V a) { return Int(static_cast<long>(a)); }
};

template <>
struct Ops<Int> {
  using V = Int;
  static V mul(const V& a, const V& b) { return V(a * b); }
  static V sub(const V& a, const V& b) { return V(a - b); }
  static V add(const V& a, const V& b) { return V(a + b); }
  static int sign(const V& a) { return mpz_sgn(a.get_mpz_t()); }
  static V abs_gcd(const V& g, const V& v) {
    V r;
    mpz_gcd(r.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return r;
  }
  static void divexact(V& a, const V& g) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  }
  static V from_mpz(const Int& z) { return z; }
  static Int to_mpz(const V& a) { return a; }
};

struct DdRow {
  std::array<std::pair<int, int>, 4> terms{};  // (column, coefficient)
  int nterms = 0;
};

// Fixed insertion order: B1 rows first, then B2 by (|K|, a, b, K).
std::vector<DdRow> dd_rows(const ShannonSystem& sys) {
  std::vector<const ShannonRow*> b2;
  std::vector<const ShannonRow*> ordered;
  for (const ShannonRow& r : sys.rows) {
    if (r.kind == AxiomKind::B1)
      ordered.push_back(&r);
    else if (r.kind == AxiomKind::B2)
      b2.push_back(&r);
  }
  std::stable_sort(b2.begin(), b2.end(),
                   [](const ShannonRow* p, const ShannonRow* q) {
                     const int pk = popcount(p->K), qk = popcount(q->K);
                     if (pk != qk) return pk < qk;
                     if (p->a != q->a) return p->a < q->a;
                     if (p->b != q->b) return p->b < q->b;
                     return p->K < q->K;
                   });
  ordered.insert(ordered.end(), b2.begin(), b2.end());

  std::vector<DdRow> out;
  out.reserve(ordered.size());
  for (const ShannonRow* r : ordered) {
    DdRow d;
    for (int t = 0; t < r->nterms; ++t) {
      const auto [mask, coeff] = r->terms[t];
      if (mask == 0) continue;  // f(empty) coordinate is eliminated
      d.terms[d.nterms++] = {static_cast<int>(mask) - 1, coeff};
    }
    out.push_back(d);
  }
  return out;
}

// Incremental rational echelon used to pick the starting basis.
class EchelonQ {
 public:
  explicit EchelonQ(Eigen::Index dim) : dim_(dim) {}
  bool try_insert(QVec row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat& lead = row[pivot_[k]];
      if (lead != 0) {
        const Rat factor = lead;
        for (Eigen::Index j = 0; j < dim_; ++j)
          if (rows_[k][j] != 0) row[j] -= factor * rows_[k][j];
      }
    }
    Eigen::Index p = -1;
    for (Eigen::Index j = 0; j < dim_; ++j)
      if (row[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) return false;
    const Rat piv = row[p];
    for (Eigen::Index j = p; j < dim_; ++j) row[j] /= piv;
    rows_.push_back(std::move(row));
    pivot_.push_back(p);
    return true;
  }

 private:
  Eigen::Index dim_;
  std::vector<QVec> rows_;
  std::vector<Eigen::Index> pivot_;
};

template <class T>
struct RayT {
  std::vector<T> v;
  Bits128 tight;
};

template <class T>
class DdRun {
 public:
  DdRun(int n, const EnumOptions& opt)
      : n_(n),
        D_((Eigen::Index{1} << n) - 1),
        opt_(opt),
        sys_(shannon_system(n)),
        rows_(dd_rows(sys_)) {
    if (rows_.size() > 128) throw std::length_error("dd: too many rows");
    deadline_valid_ = opt_.budget_seconds > 0;
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(opt_.budget_seconds));
  }

  EnumResult run() {
    init_simplex_cone();
    EnumResult res;
    res.n = n_;
    try {
      for (std::size_t t = 0; t < insert_order_.size(); ++t) {
        check_budget();
        insert(insert_order_[t]);
        if (opt_.progress)
          (*opt_.progress) << "dd: inserted " << (t + 1) << "/"
                           << insert_order_.size() << ", rays " << rays_.size()
                           << std::endl;
      }
      res.complete = true;
      res.rays = emit(rays_);
    } catch (const BudgetExceeded&) {
      res.complete = false;
      res.rays = emit(verified_subset());
    }
    if (opt_.verify) verify(res.rays);
    return res;
  }

 private:
  void check_budget() const {
    if (deadline_valid_ && std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded{};
  }

  T dot(const DdRow& row, const std::vector<T>& v) const {
    T acc{0};
    for (int t = 0; t < row.nterms; ++t) {
      const auto [col, coeff] = row.terms[t];
      acc = coeff > 0 ? Ops<T>::add(acc, v[col]) : Ops<T>::sub(acc, v[col]);
    }
    return acc;
  }

  // Greedy first independent subset in insertion order becomes the starting
  // simplicial cone; its inverse columns are the starting rays.
  void init_simplex_cone() {
    EchelonQ ech(D_);
    std::vector<int> basis;
    std::vector<int> rest;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      QVec dense = QVec::Zero(D_);
      for (int t = 0; t < rows_[r].nterms; ++t)
        dense[rows_[r].terms[t].first] = rows_[r].terms[t].second;
      if (static_cast<Eigen::Index>(basis.size()) < D_ &&
          ech.try_insert(std::move(dense)))
        basis.push_back(r);
      else
        rest.push_back(r);
    }
    if (static_cast<Eigen::Index>(basis.size()) != D_)
      throw std::logic_error("dd: axiom system is rank deficient");

    // Tight-bit positions follow the processing order: basis rows first.
    bit_of_row_.assign(rows_.size(), -1);
    row_of_bit_.assign(rows_.size(), -1);
    int pos = 0;
    for (int r : basis) {
      row_of_bit_[pos] = r;
      bit_of_row_[r] = pos++;
    }
    insert_order_ = rest;

    QMat A = QMat::Zero(D_, D_);
    for (Eigen::Index i = 0; i < D_; ++i)
      for (int t = 0; t < rows_[basis[i]].nterms; ++t)
        A(i, rows_[basis[i]].terms[t].first) = rows_[basis[i]].terms[t].second;
    QMat inv = linalg::inverse(std::move(A));

    rays_.clear();
    for (Eigen::Index j = 0; j < D_; ++j) {
      Int lcm(1);
      for (Eigen::Index i = 0; i < D_; ++i)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), inv(i, j).get_den_mpz_t());
      ZVec z(D_);
      Int gcd(0);
      for (Eigen::Index i = 0; i < D_; ++i) {
        Rat scaled = inv(i, j) * Rat(lcm);
        scaled.canonicalize();
        z[i] = scaled.get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z[i].get_mpz_t());
      }
      RayT<T> ray;
      ray.v.resize(D_);
      for (Eigen::Index i = 0; i < D_; ++i) {
        if (gcd > 1) mpz_divexact(z[i].get_mpz_t(), z[i].get_mpz_t(), gcd.get_mpz_t());
        ray.v[i] = Ops<T>::from_mpz(z[i]);
      }
      for (Eigen::Index i = 0; i < D_; ++i)
        if (i != j) ray.tight.set(bit_of_row_[basis[i]]);
      rays_.push_back(std::move(ray));
    }
    next_bit_ = static_cast<int>(D_);
  }

  void insert(int r) {
    const DdRow& row = rows_[r];
    const int bit = next_bit_++;
    bit_of_row_[r] = bit;
    row_of_bit_[bit] = r;

    const std::size_t m = rays_.size();
    std::vector<T> dots(m);
    parallel_for(m, [&](std::size_t i) { dots[i] = dot(row, rays_[i].v); });

    std::vector<std::uint32_t> pos, neg;
    for (std::size_t i = 0; i < m; ++i) {
      const int s = Ops<T>::sign(dots[i]);
      if (s > 0)
        pos.push_back(static_cast<std::uint32_t>(i));
      else if (s < 0)
        neg.push_back(static_cast<std::uint32_t>(i));
      else
        rays_[i].tight.set(bit);
    }
    if (neg.empty()) return;

    std::vector<RayT<T>> created;
    if (!pos.empty()) {
      const int want = static_cast<int>(D_) - 2;
      std::vector<std::vector<RayT<T>>> local(
          std::max<std::size_t>(1, worker_count(pos.size())));
      parallel_chunks(pos.size(), local.size(), [&](std::size_t w,
                                                    std::size_t lo,
                                                    std::size_t hi) {
        auto& sink = local[w];
        for (std::size_t pi = lo; pi < hi; ++pi) {
          if ((pi & 15) == 0) check_budget();
          const RayT<T>& rp = rays_[pos[pi]];
          for (std::size_t qi = 0; qi < neg.size(); ++qi) {
            const RayT<T>& rq = rays_[neg[qi]];
            const Bits128 common = rp.tight & rq.tight;
            if (common.count() < want) continue;
            if (!adjacent(common, want)) continue;
            sink.push_back(combine(rp, rq, dots[pos[pi]], dots[neg[qi]],
                                   common, bit));
          }
        }
      });
      for (auto& chunk : local)
        for (auto& ray : chunk) created.push_back(std::move(ray));
    }

    std::vector<RayT<T>> next;
    next.reserve(pos.size() + m - pos.size() - neg.size() + created.size());
    for (auto i : pos) next.push_back(std::move(rays_[i]));
    for (std::size_t i = 0; i < m; ++i)
      if (Ops<T>::sign(dots[i]) == 0) next.push_back(std::move(rays_[i]));
    for (auto& ray : created) next.push_back(std::move(ray));
    rays_ = std::move(next);
  }

  bool adjacent(const Bits128& common, int want) const {
    IMat m(common.count(), D_);
    m.setZero();
    int out = 0;
    common.for_each([&](int b) {
      const DdRow& row = rows_[row_of_bit(b)];
      for (int t = 0; t < row.nterms; ++t)
        m(out, row.terms[t].first) = row.terms[t].second;
      ++out;
    });
    // Both rays lie in the kernel, so the rank never exceeds want; the mod-p
    // value can only fall short, in which case the exact rank decides.
    if (linalg::rank_mod_p(m) == want) return true;
    return linalg::rank_exact_auto(m) == want;
  }

  RayT<T> combine(const RayT<T>& rp, const RayT<T>& rq, const T& dp,
                  const T& dq, const Bits128& common, int bit) const {
    RayT<T> w;
    w.v.resize(D_);
    T g{0};
    for (Eigen::Index i = 0; i < D_; ++i) {
      w.v[i] = Ops<T>::sub(Ops<T>::mul(dp, rq.v[i]), Ops<T>::mul(dq, rp.v[i]));
      g = Ops<T>::abs_gcd(g, w.v[i]);
    }
    if (g > 1)
      for (Eigen::Index i = 0; i < D_; ++i) Ops<T>::divexact(w.v[i], g);
    w.tight = common;
    w.tight.set(bit);
    return w;
  }

  int row_of_bit(int bit) const { return row_of_bit_.at(bit); }

  std::size_t worker_count(std::size_t work) const {
    const std::size_t t =
        static_cast<std::size_t>(std::max(1, opt_.threads));
    return std::min(t, std::max<std::size_t>(1, work));
  }

  template <class F>
  void parallel_for(std::size_t total, F&& f) {
    parallel_chunks(total, worker_count(total),
                    [&](std::size_t, std::size_t lo, std::size_t hi) {
                      for (std::size_t i = lo; i < hi; ++i) f(i);
                    });
  }

  template <class F>
  void parallel_chunks(std::size_t total, std::size_t workers, F&& f) {
    if (workers <= 1 || total <= 1) {
      f(0, 0, total);
      return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    std::exception_ptr err;
    std::mutex err_mu;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk, hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, w, lo, hi] {
        try {
          f(w, lo, hi);
        } catch (...) {
          std::scoped_lock lk(err_mu);
          if (!err) err = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  // Rays of the current relaxation that already satisfy every row of the full
  // system and are extremal for it are genuine extreme rays of the target
  // cone; a budgeted partial run reports exactly those.
  std::vector<RayT<T>> verified_subset() {
    std::vector<RayT<T>> keep;
    for (const RayT<T>& ray : rays_) {
      bool feasible = true;
      for (const DdRow& row : rows_)
        if (Ops<T>::sign(dot(row, ray.v)) < 0) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      const Ray pub = to_public(ray);
      const SetFunction f = pub.to_setfn();
      if (is_polymatroid(f) && is_extremal(sys_, f)) keep.push_back(ray);
    }
    return keep;
  }

  Ray to_public(const RayT<T>& ray) const {
    ZVec z(D_ + 1);
    z[0] = 0;
    for (Eigen::Index i = 0; i < D_; ++i) z[i + 1] = Ops<T>::to_mpz(ray.v[i]);
    return Ray{std::move(z)};
  }

  std::vector<Ray> emit(const std::vector<RayT<T>>& rays) const {
    std::vector<Ray> out;
    out.reserve(rays.size());
    for (const auto& r : rays) out.push_back(to_public(r));
    std::sort(out.begin(), out.end(), [](const Ray& x, const Ray& y) {
      for (Eigen::Index i = 0; i < x.values.size(); ++i) {
        const int c = cmp(x.values[i], y.values[i]);
        if (c != 0) return c < 0;
      }
      return false;
    });
    return out;
  }

  void verify(const std::vector<Ray>& rays) const {
    for (const Ray& r : rays) {
      const SetFunction f = r.to_setfn();
      if (!is_polymatroid(f) || !is_extremal(sys_, f))
        throw std::logic_error("dd: output ray failed verification");
    }
  }

  int n_;
  Eigen::Index D_;
  EnumOptions opt_;
  ShannonSystem sys_;
  std::vector<DdRow> rows_;
  std::vector<int> insert_order_;
  std::vector<int> bit_of_row_;
  std::vector<int> row_of_bit_;
  int next_bit_ = 0;
  std::vector<RayT<T>> rays_;
  bool deadline_valid_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

EnumResult enumerate_rays(int n, const EnumOptions& opt) {
  if (n < 2 || n > 5)
    throw std::invalid_argument("enumerate_rays: supported range is 2 <= n <= 5");
  if (opt.use_big_integers) return DdRun<Int>(n, opt).run();
  try {
    return DdRun<std::int64_t>(n, opt).run();
  } catch (const linalg::Int64Overflow&) {
    if (opt.progress)
      (*opt.progress) << "dd: int64 overflow, retrying with big integers"
                      << std::endl;
    return DdRun<Int>(n, opt).run();
  }
}

}  // namespace polymat
