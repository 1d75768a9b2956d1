#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polymat::gf2 {

// Rank over GF(2) of bit-packed row vectors (one machine word per row).
inline int rank(std::span<const std::uint64_t> rows) {
  std::uint64_t basis[64] = {};
  int r = 0;
  for (std::uint64_t v : rows) {
    while (v != 0) {
      int hb = 63 - std::countl_zero(v);
      if (basis[hb] == 0) {
        basis[hb] = v;
        ++r;
        break;
      }
      v ^= basis[hb];
    }
  }
  return r;
}

inline int rank(const std::vector<std::uint64_t>& rows) {
  return rank(std::span<const std::uint64_t>(rows));
}

}  // namespace polymat::gf2
