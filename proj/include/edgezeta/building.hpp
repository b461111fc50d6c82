#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgezeta/numbers.hpp"
#include "edgezeta/root_system.hpp"

namespace edgezeta {

// Dense matrix over the prime field F_p. Row reduction is deterministic:
// pivots are chosen top-down as the first row with a nonzero entry in the
// current column and scaled to 1, so every matrix has a unique reduced
// row-echelon form reachable by the same operation sequence on every run.
class FqMatrix {
 public:
  // Zero matrix; p must be prime ("prime fields only").
  FqMatrix(int rows, int cols, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int prime() const { return p_; }

  int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, int value);

  FqMatrix times(const FqMatrix& other) const;
  FqMatrix transpose() const;
  bool is_zero() const;

  // In-place reduced row echelon form; returns the rank.
  int rref();

  // Rows spanning the kernel {x : M x = 0}; (cols - rank) rows.
  FqMatrix kernel() const;

 private:
  int rows_, cols_, p_;
  std::vector<int> data_;
};

// A subspace of F_q^n held as its canonical reduced-row-echelon basis, so
// equality of subspaces is equality of matrices and the byte image of the
// basis doubles as a hash key.
class Subspace {
 public:
  // Canonicalizes the row span of the given matrix.
  explicit Subspace(const FqMatrix& span_rows);

  int dim() const { return basis_.rows(); }
  int ambient() const { return basis_.cols(); }
  int field() const { return basis_.prime(); }
  const FqMatrix& basis() const { return basis_; }

  // Canonical byte image: shape bytes followed by the entries row-major.
  const std::string& key() const { return key_; }

  bool operator==(const Subspace& o) const { return key_ == o.key_; }
  bool operator!=(const Subspace& o) const { return key_ != o.key_; }
  bool operator<(const Subspace& o) const { return key_ < o.key_; }

  bool contains(const Subspace& other) const;

 private:
  FqMatrix basis_;
  std::string key_;
};

// dim(A + B) via the rank of the stacked bases.
int dim_sum(const Subspace& a, const Subspace& b);

// The fixed symplectic Gram matrix on F_q^{2n} for the basis ordered
// e_1, ..., e_n, f_n, ..., f_1 with <e_i, f_j> = delta_ij: antidiagonal +1 on
// the first n rows and -1 on the last n.
FqMatrix symplectic_gram(int n2, int p);

// Whether the form vanishes identically on the subspace.
bool is_isotropic(const Subspace& s);

// Perpendicular subspace with respect to the fixed symplectic form.
Subspace symplectic_perp(const Subspace& s);

// All dim-dimensional subspaces of F_q^n in canonical form, sorted by key.
// Throws std::invalid_argument("prime fields only") for composite q.
std::vector<Subspace> enumerate_subspaces(int n, int q, int dim);

// All totally isotropic dim-dimensional subspaces of the symplectic F_q^{n2},
// sorted by key. Requires n2 even and dim <= n2 / 2.
std::vector<Subspace> enumerate_isotropic(int n2, int q, int dim);

// Whether the path a -- v -- c is geodesic: a and c must both be neighbors of
// v in the incidence graph (proper inclusion either way; throws otherwise),
// and the predicate holds iff they are opposite in the link of v:
//   both below v:  dim a + dim c = dim v and a \cap c = 0;
//   both above v:  a \cap c = v, plus (family A) dim a + dim c - dim v =
//                  ambient, or (family C) a \cap c^perp = v so the form pairs
//                  a/v with c/v nondegenerately;
//   one below, one above: never geodesic (the link splits as a join).
bool geodesic_adjacent(Family family, const Subspace& a, const Subspace& v,
                       const Subspace& c);

// The incidence 1-skeleton of the subspace geometry together with its
// directed geodesic edge graph on incident ordered pairs.
struct BuildingSkeleton {
  Family family;  // A or C
  int n;          // family A: ambient dimension; family C: rank (ambient 2n)
  int q;

  // (dim, subspace), grouped by dim ascending and key-sorted within a dim.
  std::vector<std::pair<int, Subspace>> vertices;
  // Sorted undirected neighbor lists (proper inclusion, distinct dims).
  std::vector<std::vector<int>> incidence;

  // Directed incident pairs (tail, head) and the geodesic adjacency on them:
  // (a -> v) steps to (v -> c) iff geodesic_adjacent(a, v, c).
  std::vector<std::pair<int, int>> x2;
  std::vector<std::vector<int>> x2_out;

  long long edge_count() const;                 // undirected skeleton edges
  std::pair<int, int> x2_type(int k) const;     // (tail dim, head dim)
};

// Builds the full skeleton by brute enumeration. Supported sizes: family A
// with 2 <= n <= 4 and q in {2,3}; family C with n = 2, q in {2,3} or n = 3,
// q = 2 (slow). Anything else throws
// std::invalid_argument("size out of supported range").
BuildingSkeleton build_x2(Family family, int n, int q);

// Exact closed-walk counts N(1..lmax) in the geodesic edge graph: N(L) is the
// trace of the L-th power of the x2 adjacency matrix, accumulated per basis
// vector by sparse matrix-vector products in big-integer arithmetic.
// lmax is capped at 20.
std::vector<BigInt> closed_walk_counts(const BuildingSkeleton& sk, int lmax);

// Text dump for external graph tools: one "# k (r,s)" header line per x2
// vertex giving its type pair, then one "src_idx dst_idx" line per edge.
std::string skeleton_dump(const BuildingSkeleton& sk);

}  // namespace edgezeta
