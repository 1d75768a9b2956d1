#include "polymat/mask.hpp"

#include <unordered_set>

namespace polymat {

GroundSet::GroundSet(int n) : GroundSet(default_labels(n)) {}

GroundSet::GroundSet(std::vector<std::string> labels)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (n_ < 1)
    throw std::invalid_argument("ground set needs at least one element");
  if (n_ > 31)
    throw std::invalid_argument("ground set exceeds mask width (max 31)");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty())
      throw std::invalid_argument("empty element name");
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate element name '" + l + "'");
  }
}

int GroundSet::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == name) return i;
  return -1;
}

std::string GroundSet::subset_name(Mask m) const {
  std::string s = "{";
  bool first = true;
  for_each_elem(m, [&](int i) {
    if (!first) s += ',';
    s += labels_.at(i);
    first = false;
  });
  s += '}';
  return s;
}

std::vector<std::string> GroundSet::default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (n <= 26)
      out.emplace_back(1, static_cast<char>('a' + i));
    else
      out.push_back("e" + std::to_string(i));
  }
  return out;
}

}  // namespace polymat
