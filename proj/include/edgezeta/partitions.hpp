#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgezeta/laurent.hpp"
#include "edgezeta/numbers.hpp"

namespace edgezeta {

// Integer partition: weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }                          // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {  // 1-based; 0 past the end
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const {  // lexicographic on part lists
    return parts_ < o.parts_;
  }

  std::string str() const;  // "(3,1)"; "()" for empty

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Bipartition {
  Partition plus;   // lambda
  Partition minus;  // mu
  int size() const { return plus.size() + minus.size(); }
  bool operator==(const Bipartition& o) const {
    return plus == o.plus && minus == o.minus;
  }
  bool operator<(const Bipartition& o) const {
    if (plus != o.plus) return plus < o.plus;
    return minus < o.minus;
  }
  std::string str() const { return "(" + plus.str() + "," + minus.str() + ")"; }
};

// All partitions of n, lexicographically ascending on part lists.
std::vector<Partition> partitions_of(int n);
// All bipartitions of n, ascending on (plus, minus).
std::vector<Bipartition> bipartitions_of(int n);

Partition conjugate(const Partition& p);

// kappa = sum_i C(p_i, 2) - sum_j C(p'_j, 2); antisymmetric under conjugation.
long long kappa(const Partition& p);

// Number of semistandard tableaux of the given shape whose entry counts are
// exactly the content vector (entries may be zero). Direct cell-by-cell
// backtracking. The content must sum to |shape|.
BigInt kostka(const Partition& shape, const std::vector<int>& content);

// Coefficient of s_nu in s_mu * h_k: 1 when nu/mu is a horizontal k-strip,
// else 0. Requires |nu| = |mu| + k.
int pieri_coefficient(const Partition& nu, const Partition& mu, int k);

// Same count as kostka(), computed instead by growing the shape one content
// layer at a time through pieri_coefficient. Independent cross-check.
BigInt kostka_via_pieri(const Partition& shape, const std::vector<int>& content);

// Hook length of cell (r, c), 0-based, of p.
int hook_length(const Partition& p, int r, int c);

// Number of standard tableaux of shape p (hook length formula).
BigInt hook_dimension(const Partition& p);

// q-analogue: q^(sum (i-1) p_i) * prod_{i=1..n}(q^i - 1) / prod_cells (q^h - 1).
// Polynomial in q with nonnegative integer coefficients; value 1 at q = 1 gives
// hook_dimension.
LaurentPoly q_hook_dimension_A(const Partition& p);

// dim of the reflection-group irreducible attached to a bipartition of n:
// C(n, |minus|) * hook_dimension(plus) * hook_dimension(minus).
BigInt wn_dimension(const Bipartition& bp);

// Shifted first-column encoding of a bipartition: X has k entries
// plus_i - i + k, Y has k-1 entries minus_j - j + (k-1); both strictly
// decreasing. Requires k >= max(len plus, len minus + 1).
struct Symbol {
  std::vector<int> X;  // strictly decreasing
  std::vector<int> Y;  // strictly decreasing
};

Symbol symbol_of(const Bipartition& bp, int k);

// Multisets of pairs (b, c), 0 <= b < c, sorted ascending; a pair that arises
// from both rows of the symbol appears twice.
std::vector<std::pair<int, int>> hooks(const Symbol& s);
std::vector<std::pair<int, int>> cohooks(const Symbol& s);

long long a_stat(const Symbol& s);
long long b_stat(const Symbol& s);

// Degree polynomial of the bipartition's principal-series character:
//   q^a * prod_{i=1..n}(q^{2i}-1) / (2^b * prod_hooks(q^{c-b}-1)
//                                        * prod_cohooks(q^{c-b}+1)).
// Exact division; throws std::domain_error("not a polynomial") if it is not.
// The result does not depend on the admissible k used for the symbol; the
// one-argument form uses the smallest.
LaurentPoly generic_degree_C(const Bipartition& bp);
LaurentPoly generic_degree_C(const Bipartition& bp, int k);

}  // namespace edgezeta
