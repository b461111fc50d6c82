#include "edgezeta/type_orbits.hpp"

#include <set>
#include <stdexcept>

namespace edgezeta {

namespace {
std::vector<int> omit(int rank, int skip1, int skip2 = 0) {
  std::vector<int> labels;
  for (int l = 1; l <= rank; ++l)
    if (l != skip1 && l != skip2) labels.push_back(l);
  return labels;
}

void check_pair(const RootSystem& rs, int r, int s) {
  if (r < 1 || r > rs.rank() || s < 1 || s > rs.rank())
    throw std::invalid_argument("label out of range");
  if (r == s) throw std::invalid_argument("pair labels must be distinct");
}
}  // namespace

std::pair<int, int> next_type(const RootSystem& rs, int r, int s) {
  check_pair(rs, r, s);
  WeylElement w = rs.longest_parabolic(omit(rs.rank(), s));
  return {s, rs.conjugated_simple(w, r)};
}

std::pair<int, int> prev_type(const RootSystem& rs, int r, int s) {
  check_pair(rs, r, s);
  WeylElement w = rs.longest_parabolic(omit(rs.rank(), r));
  return {rs.conjugated_simple(w, s), r};
}

namespace {
TypeOrbit trace_cycle(const RootSystem& rs, std::pair<int, int> start) {
  TypeOrbit orbit;
  orbit.cycle = {start.first, start.second};
  std::pair<int, int> p = start;
  while (true) {
    p = next_type(rs, p.first, p.second);
    if (p == start) break;
    // p is now (t_k, t_{k+1}); recording the second component extends the
    // cycle through ... t_{c-1}, t_c with t_c = t_0 closing it.
    orbit.cycle.push_back(p.second);
    if (orbit.cycle.size() > size_t(rs.rank()) * rs.rank() + 2)
      throw std::logic_error("type orbit failed to close");
  }
  return orbit;
}
}  // namespace

std::vector<TypeOrbit> enumerate_orbits(const RootSystem& rs) {
  std::vector<TypeOrbit> orbits;
  std::set<std::pair<int, int>> visited;
  for (int r = 1; r <= rs.rank(); ++r) {
    for (int s = 1; s <= rs.rank(); ++s) {
      if (r == s || visited.count({r, s})) continue;
      // Pairs are scanned in lexicographic order, so an unvisited pair is
      // automatically the smallest one of its orbit.
      TypeOrbit orbit = trace_cycle(rs, {r, s});
      for (int k = 0; k < orbit.size(); ++k)
        visited.insert({orbit.cycle[k], orbit.cycle[k + 1]});
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

TypeOrbit orbit_of_pair(const RootSystem& rs, int r, int s) {
  check_pair(rs, r, s);
  for (TypeOrbit& orbit : enumerate_orbits(rs))
    for (int k = 0; k < orbit.size(); ++k)
      if (orbit.cycle[k] == r && orbit.cycle[k + 1] == s) return orbit;
  throw std::logic_error("pair not covered by any orbit");
}

}  // namespace edgezeta
