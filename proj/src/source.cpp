#include "polymat/source.hpp"

#include <algorithm>
#include <stdexcept>

#include "polymat/gf2.hpp"
#include "polymat/log2bound.hpp"

namespace polymat {

std::vector<Mask> subset_order(int k) {
  if (k < 1 || k > 20)
    throw std::invalid_argument("subset_order: k out of range");
  std::vector<Mask> order;
  order.reserve(std::size_t{1} << k);
  for (Mask m = 0; m < (Mask{1} << k); ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), [](Mask p, Mask q) {
    if (popcount(p) != popcount(q)) return popcount(p) > popcount(q);
    return p > q;
  });
  return order;
}

Mask ConstructionLayout::x_set(Mask J) const {
  Mask out = 0;
  for_each_elem(J, [&](int j) { out |= elem_bit(x(j + 1)); });
  return out;
}

Mask ConstructionLayout::y_prefix(int t) const {
  Mask out = 0;
  for (int s = 0; s <= t; ++s) out |= elem_bit(y(s));
  return out;
}

ConstructionLayout construction_layout(const ConstructionParams& p) {
  if (p.k < 2)
    throw std::invalid_argument("construction needs k >= 2");
  ConstructionLayout lay;
  lay.k = p.k;
  lay.dim = 1 << p.k;
  lay.n = 1 + p.k + lay.dim;
  if (lay.n > 31)
    throw std::length_error("construction ground set exceeds mask width");
  lay.order = subset_order(p.k);
  return lay;
}

namespace {

// Hidden-bit indices: bit 0 observes a; the block for x_i starts at 2^(i-1)
// and holds one bit per subset of {1..i-1}.
inline int x_block_offset(int i) { return 1 << (i - 1); }

std::vector<std::string> construction_labels(const ConstructionLayout& lay) {
  std::vector<std::string> labels;
  labels.reserve(lay.n);
  labels.emplace_back("a");
  for (int i = 1; i <= lay.k; ++i) labels.push_back("x" + std::to_string(i));
  for (int t = 0; t < lay.dim; ++t) labels.push_back("y" + std::to_string(t));
  return labels;
}

}  // namespace

LinearSource build_source(const ConstructionParams& p) {
  const ConstructionLayout lay = construction_layout(p);
  LinearSource src{GroundSet(construction_labels(lay)), lay.dim, {}};
  src.rows.resize(lay.n);

  src.rows[lay.a()] = {std::uint64_t{1}};  // the single bit r

  for (int i = 1; i <= lay.k; ++i) {
    auto& vecs = src.rows[lay.x(i)];
    const int block = x_block_offset(i);
    for (Mask J = 0; J < (Mask{1} << (i - 1)); ++J)
      vecs.push_back(std::uint64_t{1} << (block + J));
  }

  for (int t = 0; t < lay.dim; ++t) {
    const Mask K = lay.order[t];
    std::uint64_t v = 1;  // r
    for_each_elem(K, [&](int bitpos) {
      const int j = bitpos + 1;                      // element index in {1..k}
      const Mask restr = K & ((Mask{1} << (j - 1)) - 1);  // K restricted below j
      v ^= std::uint64_t{1} << (x_block_offset(j) + restr);
    });
    src.rows[lay.y(t)] = {v};
  }
  return src;
}

int rank_value(const LinearSource& src, Mask A) {
  if (A > src.ground.full())
    throw std::out_of_range("subset mask out of range");
  std::vector<std::uint64_t> stacked;
  for_each_elem(A, [&](int i) {
    const auto& vecs = src.rows[i];
    stacked.insert(stacked.end(), vecs.begin(), vecs.end());
  });
  return gf2::rank(stacked);
}

SetFunction rank_function(const LinearSource& src) {
  const GroundSet& g = src.ground;
  if (g.size() > kDenseCap)
    throw std::length_error("source ground set exceeds dense table cap");
  QVec v(g.table_size());
  for (Mask A = 0; A <= g.full(); ++A) v[A] = rank_value(src, A);
  return SetFunction(g, std::move(v));
}

SetFunction build_polymatroid(const ConstructionParams& p) {
  const ConstructionLayout lay = construction_layout(p);
  if (lay.n > kDenseCap)
    throw std::length_error("construction table too large for k = " +
                            std::to_string(p.k));
  return rank_function(build_source(p));
}

Rat brute_entropy(const LinearSource& src, Mask A) {
  if (src.dim > 16)
    throw std::length_error("brute_entropy: ambient dimension too large");
  std::vector<std::uint64_t> stacked;
  for_each_elem(A, [&](int i) {
    const auto& vecs = src.rows[i];
    stacked.insert(stacked.end(), vecs.begin(), vecs.end());
  });
  if (stacked.size() > 63)
    throw std::length_error("brute_entropy: too many observed bits");

  std::vector<std::uint64_t> seen;
  seen.reserve(std::size_t{1} << src.dim);
  for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << src.dim);
       ++assign) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < stacked.size(); ++j)
      key |= static_cast<std::uint64_t>(std::popcount(stacked[j] & assign) & 1)
             << j;
    seen.push_back(key);
  }
  std::sort(seen.begin(), seen.end());
  const auto cnt = static_cast<std::uint64_t>(
      std::unique(seen.begin(), seen.end()) - seen.begin());
  if (!std::has_single_bit(cnt))
    throw std::logic_error("projection count of a linear source not a power of 2");
  return Rat(static_cast<long>(std::countr_zero(cnt)));
}

ConditionsReport verify_conditions(const ConstructionParams& p) {
  const ConstructionLayout lay = construction_layout(p);
  const LinearSource src = build_source(p);
  ConditionsReport rep;
  rep.k = lay.k;
  rep.n = lay.n;

  const Mask a = elem_bit(lay.a());

  rep.cond_i = true;
  for (int t = 0; t < lay.dim; ++t) {
    const Mask A = lay.x_at(t) | elem_bit(lay.y(t));
    if (rank_value(src, A | a) != rank_value(src, A)) rep.cond_i = false;
  }

  rep.cond_ii = true;
  for (int t = 1; t < lay.dim; ++t) {
    const Mask A = lay.x_at(t) | lay.y_prefix(t - 1);
    if (rank_value(src, A | a) != rank_value(src, A) + 1) rep.cond_ii = false;
  }

  rep.f_of_x = rank_value(src, lay.x_at(0));

  const int fa = rank_value(src, a);
  int best = 0;
  for (int b = 0; b < lay.n; ++b)
    best = std::max(best, rank_value(src, elem_bit(b)));
  rep.c_ratio = Rat(best, fa);
  rep.c_ratio.canonicalize();

  rep.x_bound = Rat((1L << lay.k) - 1, lay.k);
  rep.x_bound.canonicalize();

  // Certified comparison against n / (2 log2 n): a lower bracket L <= log2 n
  // makes n/(2L) an upper estimate of the true threshold.
  const Log2Bracket br = log2_bracket(static_cast<unsigned long>(lay.n));
  rep.growth_threshold = Rat(lay.n) / (2 * br.lower);
  rep.growth_threshold.canonicalize();
  rep.bound_holds =
      rep.c_ratio >= rep.x_bound && rep.x_bound > rep.growth_threshold;
  return rep;
}

}  // namespace polymat
