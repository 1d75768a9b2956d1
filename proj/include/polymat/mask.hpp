#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polymat {

// Subset of the ground set, bit i <-> element i.
using Mask = std::uint32_t;

inline Mask elem_bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool has_elem(Mask m, int i) { return (m >> i) & 1u; }

template <class F>
inline void for_each_elem(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// Visits every submask of `sup`, the empty set included.
template <class F>
inline void for_each_submask(Mask sup, F&& f) {
  Mask s = sup;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & sup;
  }
}

// Dense tables hold 2^n values; keep them desk-scale.
inline constexpr int kDenseCap = 21;

class GroundSet {
 public:
  explicit GroundSet(int n);
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return n_; }
  Mask full() const { return (Mask{1} << n_) - 1; }
  std::size_t table_size() const { return std::size_t{1} << n_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  // -1 when the name is not an element.
  int index_of(std::string_view name) const;

  // "{}", "{a}", "{a,c}" -- for messages and reports.
  std::string subset_name(Mask m) const;

  bool operator==(const GroundSet& other) const = default;

  static std::vector<std::string> default_labels(int n);

 private:
  int n_;
  std::vector<std::string> labels_;
};

}  // namespace polymat
