#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgezeta/cyclotomic.hpp"
#include "edgezeta/laurent.hpp"
#include "edgezeta/numbers.hpp"
#include "edgezeta/partitions.hpp"
#include "edgezeta/type_orbits.hpp"

namespace edgezeta {

// One irreducible contribution to the inverse zeta factor of a type orbit:
// the eigenvalues zeta_d^k * q^(E/d) for the k in `splits`, each occurring
// with multiplicity splits[k] * degree(q).
struct SpectralLine {
  Partition lambda;              // linear family label, or the plus half
  std::optional<Partition> mu;   // symplectic family minus half
  Eigenvalue base;               // unity_index 0: the positive real root q^(E/d)
  BigInt n_total;                // total multiplicity across the splits
  LaurentPoly degree;            // degree polynomial attached to the label
  std::map<int, BigInt> splits;  // unity_index -> positive multiplicity

  std::string label() const;  // "(2,1)" or "((1),(2))"
};

// Complete spectral data of one type orbit's zeta factor:
//   1/Z_C = prod over lines, over (k, m) in splits,
//           (1 - zeta_d^k q^(E/d) u^c)^(m * degree(q)).
struct ZetaFactor {
  TypeOrbit orbit;
  int c = 0;  // orbit length; factors live in u^c
  int m = 0;  // half period
  int d = 0;  // root order, d * c = 2m
  std::vector<SpectralLine> lines;
};

// Spectral data for one orbit of the linear family A_{n-1}, the orbit through
// the pair (i, i+j) with gap pattern (i, j, k), i+j+k = n. All three gaps must
// be positive.
ZetaFactor typeA_component(int n, int i, int j, int k);

// Spectral data for one orbit of the symplectic family C_n, the orbit through
// (i, i+j) with 1 <= i <= j and i + j <= n.
ZetaFactor typeC_component(int n, int i, int j);

// All orbit factors of the family, in orbit enumeration order. Families A, B,
// and C only (B is handled by its C alias: same Weyl group, same factors);
// other families have no closed factorization here and throw
// std::invalid_argument("no closed formula in scope").
std::vector<ZetaFactor> full_edge_zeta(Family family, int rank);

// Number of closed walks of length L in the geodesic edge graph predicted by
// the factors, at a concrete prime power q >= 2:
//   N(L) = sum over factors with c | L of
//          c * sum over eigenvalues lambda of lambda^(L/c),
// with each line's eigenvalues weighted by splits[k] * degree(q). The result
// is asserted to be a nonnegative integer.
BigInt predicted_closed_walks(const std::vector<ZetaFactor>& factors,
                              const BigInt& q, long long L);

enum class EmitFormat { text, json };

// Renders the factored inverse zeta function. Text mode is the stable
// golden-file layout, one line per spectral line:
//   ((1),(2)): (1-q^4*u^4)^[2]x[q^6+q^4+q^2]
// JSON mode is the stable machine contract documented in the repository
// README. An empty factor list renders as "1" / an empty orbit array.
std::string emit_factored(Family family, int rank,
                          const std::vector<ZetaFactor>& factors,
                          EmitFormat format);

}  // namespace edgezeta
