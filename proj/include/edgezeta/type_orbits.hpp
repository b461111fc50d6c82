#pragma once

#include <utility>
#include <vector>

#include "edgezeta/root_system.hpp"

namespace edgezeta {

// One orbit of the step map on ordered pairs of distinct diagram labels.
// cycle lists labels t_0, t_1, ..., t_c with t_c = t_0, so consecutive
// entries are the orbit's pairs (t_k, t_{k+1}) and c >= 2 is the orbit size.
// Orbits are reported starting from their lexicographically smallest pair.
struct TypeOrbit {
  std::vector<int> cycle;
  int size() const { return static_cast<int>(cycle.size()) - 1; }
  // Label at any position, reading the cycle periodically.
  int label(long long k) const {
    int c = size();
    return cycle[static_cast<int>(((k % c) + c) % c)];
  }
};

// Step map on ordered pairs: (r, s) -> (s, conjugate of r by the longest
// element of the parabolic omitting s). Always lands on another ordered pair
// of distinct labels.
std::pair<int, int> next_type(const RootSystem& rs, int r, int s);

// Inverse step: (r, s) -> (conjugate of s by the longest element of the
// parabolic omitting r, r).
std::pair<int, int> prev_type(const RootSystem& rs, int r, int s);

// All orbits, sorted by their lexicographically smallest pair. The orbit
// sizes add up to rank*(rank-1), the number of ordered pairs.
std::vector<TypeOrbit> enumerate_orbits(const RootSystem& rs);

// The orbit containing the pair (r, s), rotated to start at its
// lexicographically smallest pair.
TypeOrbit orbit_of_pair(const RootSystem& rs, int r, int s);

}  // namespace edgezeta
