#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace edgezeta {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_to_char(Family f);

class RootSystem;

// Element of a finite Weyl group, stored as the permutation it induces on the
// full root list of its root system: perm[r] is the index of the image of
// root r. Negation acts as index shift by the number of positive roots, so
// perm(-a) = -perm(a) is maintained structurally and the length function is
// just the count of positive roots sent negative.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}

  static WeylElement identity(int num_roots);

  int num_roots() const { return static_cast<int>(perm_.size()); }
  int num_positive() const { return num_roots() / 2; }
  int image(int root_index) const { return perm_[root_index]; }

  bool is_identity() const;
  int length() const;

  // Composition acting on roots: (x * y)(a) = x(y(a)).
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y);
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }

 private:
  std::vector<int> perm_;
};

// Crystallographic root system with the classical diagram labelings:
// chains 1-2-...-n, the double bond of B/C at the far end (n-1, n), the D fork
// at nodes n-1 and n both joined to n-2, the E chain 1-3-4-5-6(-7)(-8) with
// node 2 joined to node 4, F4 as 1-2=3-4 and G2 as 1=2.
//
// Roots are integer coordinate vectors with respect to the simple roots, so
// every family (including F4 and G2) lives in plain integer arithmetic; the
// simple reflections act through the Cartan matrix. The list stores all
// positive roots first, then their negatives in the same order.
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }
  // Coordinates of root r over the simple roots (labels 1..rank in order).
  const std::vector<int>& root(int r) const { return roots_[r]; }
  // Index of the simple root with the given 1-based diagram label.
  int simple_root_index(int label) const;
  int negate(int r) const {
    return r < num_positive_ ? r + num_positive_ : r - num_positive_;
  }

  WeylElement identity() const { return WeylElement::identity(num_roots()); }
  WeylElement simple_reflection(int label) const;

  // Longest element of the standard parabolic generated by the given 1-based
  // labels, computed by greedy ascent: repeatedly multiply by a generator that
  // still sends a positive root of the parabolic subsystem negative.
  WeylElement longest_parabolic(const std::vector<int>& labels) const;
  // Longest element of the whole group.
  WeylElement longest() const;

  // Label t such that w s_label w^{-1} = s_t; throws
  // std::domain_error("not a simple conjugate") when the conjugate is not a
  // simple reflection.
  int conjugated_simple(const WeylElement& w, int label) const;

  // Number of positive roots supported on the given labels.
  int parabolic_positive_count(const std::vector<int>& labels) const;

  // Debug dump: images of the simple roots as coordinate vectors.
  std::string describe(const WeylElement& w) const;

 private:
  RootSystem() = default;

  int root_index(const std::vector<int>& coords) const;

  Family family_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;  // cartan_[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_index_;  // label-1 -> root index
  int num_positive_ = 0;
  std::vector<WeylElement> simple_refl_;  // label-1 -> reflection

  // Longest-parabolic memo, shared across copies of the same system and
  // guarded for concurrent lookups (the system itself is immutable).
  struct Cache {
    std::mutex mutex;
    std::map<uint32_t, WeylElement> memo;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace edgezeta
