#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymat/cone.hpp"
#include "polymat/setfn.hpp"

namespace polymat::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set-function document: whitespace-separated tokens, '#' comments.
//
//   n 3
//   elements a b c
//   values
//   0 1 1 2 1 2 2 3
//
// values are integers or p/q rationals indexed by subset mask (bit i is
// elements[i]); writers emit canonical reduced form.
SetFunction read_setfn(std::istream& in);
SetFunction read_setfn_file(const std::string& path);
void write_setfn(std::ostream& out, const SetFunction& f);

// Ray document: header line "n count", then one ray per line as 2^n integers.
struct RayFile {
  int n = 0;
  std::vector<Ray> rays;
};
RayFile read_rays(std::istream& in);
RayFile read_rays_file(const std::string& path);
void write_rays(std::ostream& out, int n, const std::vector<Ray>& rays);

}  // namespace polymat::io
