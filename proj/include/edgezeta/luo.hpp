#pragma once

#include <vector>

#include "edgezeta/root_system.hpp"
#include "edgezeta/type_orbits.hpp"

namespace edgezeta {

// Half-period data of one type orbit. Writing t_0, t_1, ... for the orbit's
// label sequence, w_k for the longest element of the parabolic omitting t_k
// and w'_k for the longest element omitting both t_k and t_{k+1}, the product
// (w'_0 w_1)(w'_1 w_2)...(w'_{m-1} w_m) telescopes to w'_0 w_0^S (the full
// longest element w_S times nothing shorter) with lengths adding exactly; m
// is the unique index where the running length sum reaches the target.
struct LuoResult {
  TypeOrbit orbit;
  int m = 0;
  // length of each factor w'_{k-1} w_k, k = 1..m; the sum is the length of
  // w'_0 w_S.
  std::vector<int> segment_lengths;
  // The whole-cycle word (w'_0 w_1)(w'_1 w_2)...(w'_{c-1} w_c).
  WeylElement cycle_word;
};

// Computes m by accumulating segment lengths until they reach the length of
// w'_0 w_S, then verifies the telescoping product identity and the type shift
// (conjugation by w_S advances the orbit by m positions). A running sum that
// jumps past the target throws std::logic_error("length additivity violated").
LuoResult half_period(const RootSystem& rs, const TypeOrbit& orbit);

// Independent recomputation of m: the minimal n >= 1 with u_n = identity for
// the recursion u_0 = w_S w'_0, u_{n+1} = u_n (w'_n w_{n+1}).
int verify_u_sequence(const RootSystem& rs, const TypeOrbit& orbit);

// The whole-cycle word (w'_0 w_1)(w'_1 w_2)...(w'_{c-1} w_c) on its own.
WeylElement cycle_word(const RootSystem& rs, const TypeOrbit& orbit);

}  // namespace edgezeta
