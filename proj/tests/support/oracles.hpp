#pragma once

// Independent brute-force oracles, kept apart from the library's own
// algorithms on purpose.

#include <vector>

#include "polymat/cone.hpp"

namespace oracles {

// Complete extreme-ray list by exhaustion: every subset of 2^n - 2 axiom rows
// (in the f(empty)-eliminated coordinates) whose rank is 2^n - 2 contributes
// its one-dimensional kernel direction when feasible. Practical for n <= 3.
std::vector<polymat::Ray> brute_force_rays(int n);

}  // namespace oracles
