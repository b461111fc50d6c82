#include "edgezeta/building.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace edgezeta {

namespace {

bool prime_p(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_inverse(int a, int p) {
  long long acc = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

}  // namespace

FqMatrix::FqMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  if (!prime_p(p)) throw std::invalid_argument("prime fields only");
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

void FqMatrix::set(int r, int c, int value) {
  int v = value % p_;
  if (v < 0) v += p_;
  data_[static_cast<std::size_t>(r) * cols_ + c] = v;
}

FqMatrix FqMatrix::times(const FqMatrix& other) const {
  if (cols_ != other.rows_ || p_ != other.p_)
    throw std::invalid_argument("matrix shape mismatch");
  FqMatrix out(rows_, other.cols_, p_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      int a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols_; ++c)
        out.set(r, c, out.at(r, c) + a * other.at(k, c));
    }
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v == 0; });
}

int FqMatrix::rref() {
  int pivot_row = 0;
  for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows_; ++r)
      if (at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int c = 0; c < cols_; ++c) {
        int tmp = at(sel, c);
        set(sel, c, at(pivot_row, c));
        set(pivot_row, c, tmp);
      }
    int inv = mod_inverse(at(pivot_row, col), p_);
    for (int c = 0; c < cols_; ++c) set(pivot_row, c, at(pivot_row, c) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == pivot_row) continue;
      int factor = at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < cols_; ++c)
        set(r, c, at(r, c) - factor * at(pivot_row, c));
    }
    ++pivot_row;
  }
  return pivot_row;
}

FqMatrix FqMatrix::kernel() const {
  FqMatrix red = *this;
  int rank = red.rref();
  std::vector<int> pivot_of_row(rank);
  std::vector<bool> is_pivot(cols_, false);
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (c < cols_ && red.at(r, c) == 0) ++c;
    pivot_of_row[r] = c;
    is_pivot[c] = true;
  }
  FqMatrix out(cols_ - rank, cols_, p_);
  int row = 0;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.set(row, free_col, 1);
    for (int r = 0; r < rank; ++r)
      out.set(row, pivot_of_row[r], -red.at(r, free_col));
    ++row;
  }
  return out;
}

Subspace::Subspace(const FqMatrix& span_rows) : basis_(span_rows) {
  int rank = basis_.rref();
  FqMatrix trimmed(rank, basis_.cols(), basis_.prime());
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < basis_.cols(); ++c) trimmed.set(r, c, basis_.at(r, c));
  basis_ = trimmed;
  key_.reserve(static_cast<std::size_t>(2 + rank * basis_.cols()));
  key_.push_back(static_cast<char>(basis_.rows()));
  key_.push_back(static_cast<char>(basis_.cols()));
  for (int r = 0; r < basis_.rows(); ++r)
    for (int c = 0; c < basis_.cols(); ++c)
      key_.push_back(static_cast<char>(basis_.at(r, c)));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  return dim_sum(*this, other) == dim();
}

int dim_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.field() != b.field())
    throw std::invalid_argument("mismatched ambient spaces");
  FqMatrix stacked(a.dim() + b.dim(), a.ambient(), a.field());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.ambient(); ++c) stacked.set(r, c, a.basis().at(r, c));
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < b.ambient(); ++c)
      stacked.set(a.dim() + r, c, b.basis().at(r, c));
  return stacked.rref();
}

FqMatrix symplectic_gram(int n2, int p) {
  if (n2 <= 0 || n2 % 2 != 0)
    throw std::invalid_argument("ambient dimension must be even");
  FqMatrix j(n2, n2, p);
  for (int r = 0; r < n2 / 2; ++r) j.set(r, n2 - 1 - r, 1);
  for (int r = n2 / 2; r < n2; ++r) j.set(r, n2 - 1 - r, -1);
  return j;
}

bool is_isotropic(const Subspace& s) {
  FqMatrix j = symplectic_gram(s.ambient(), s.field());
  return s.basis().times(j).times(s.basis().transpose()).is_zero();
}

Subspace symplectic_perp(const Subspace& s) {
  FqMatrix j = symplectic_gram(s.ambient(), s.field());
  return Subspace(s.basis().times(j).kernel());
}

std::vector<Subspace> enumerate_subspaces(int n, int q, int dim) {
  if (!prime_p(q)) throw std::invalid_argument("prime fields only");
  if (n < 0 || dim < 0 || dim > n)
    throw std::invalid_argument("dimension out of range");
  std::vector<Subspace> out;
  std::vector<int> pivots(dim);
  for (int i = 0; i < dim; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < dim; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);
    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      FqMatrix m(dim, n, q);
      for (int r = 0; r < dim; ++r) m.set(r, pivots[r], 1);
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        m.set(free_pos[i].first, free_pos[i].second, vals[i]);
      out.emplace_back(m);
      std::size_t pos = 0;
      while (pos < vals.size() && ++vals[pos] == q) vals[pos++] = 0;
      if (pos == vals.size()) break;
    }
    int i = dim - 1;
    while (i >= 0 && pivots[i] == n - dim + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_isotropic(int n2, int q, int dim) {
  if (!prime_p(q)) throw std::invalid_argument("prime fields only");
  if (n2 <= 0 || n2 % 2 != 0)
    throw std::invalid_argument("ambient dimension must be even");
  if (dim < 0 || 2 * dim > n2)
    throw std::invalid_argument("dimension out of range");
  std::vector<Subspace> out;
  for (auto& s : enumerate_subspaces(n2, q, dim))
    if (is_isotropic(s)) out.push_back(std::move(s));
  return out;
}

namespace {

bool incident(const Subspace& x, const Subspace& y) {
  if (x.dim() == y.dim()) return false;
  return x.dim() < y.dim() ? y.contains(x) : x.contains(y);
}

}  // namespace

bool geodesic_adjacent(Family family, const Subspace& a, const Subspace& v,
                       const Subspace& c) {
  if (family == Family::B) family = Family::C;
  if (family != Family::A && family != Family::C)
    throw std::invalid_argument("family must be A or C");
  if (a.ambient() != v.ambient() || c.ambient() != v.ambient() ||
      a.field() != v.field() || c.field() != v.field())
    throw std::invalid_argument("mismatched ambient spaces");
  if (!incident(a, v) || !incident(c, v))
    throw std::invalid_argument("not an edge of the incidence graph");
  const bool a_below = a.dim() < v.dim();
  const bool c_below = c.dim() < v.dim();
  // The link of v is a join of the geometry below and the geometry above, and
  // opposition never crosses the two factors.
  if (a_below != c_below) return false;
  if (a_below) {
    return a.dim() + c.dim() == v.dim() &&
           dim_sum(a, c) == a.dim() + c.dim();  // a meets c trivially
  }
  int meet = a.dim() + c.dim() - dim_sum(a, c);
  if (family == Family::A)
    return meet == v.dim() && a.dim() + c.dim() - v.dim() == a.ambient();
  if (a.dim() != c.dim() || meet != v.dim()) return false;
  Subspace cperp = symplectic_perp(c);
  return a.dim() + cperp.dim() - dim_sum(a, cperp) == v.dim();
}

long long BuildingSkeleton::edge_count() const {
  long long total = 0;
  for (const auto& nb : incidence) total += static_cast<long long>(nb.size());
  return total / 2;
}

std::pair<int, int> BuildingSkeleton::x2_type(int k) const {
  return {vertices[x2[k].first].first, vertices[x2[k].second].first};
}

BuildingSkeleton build_x2(Family family, int n, int q) {
  if (family == Family::B) family = Family::C;
  bool supported = false;
  if (family == Family::A)
    supported = n >= 2 && n <= 4 && (q == 2 || q == 3);
  else if (family == Family::C)
    supported = (n == 2 && (q == 2 || q == 3)) || (n == 3 && q == 2);
  if (!supported) throw std::invalid_argument("size out of supported range");

  BuildingSkeleton sk;
  sk.family = family;
  sk.n = n;
  sk.q = q;
  const int top = family == Family::A ? n - 1 : n;
  for (int d = 1; d <= top; ++d) {
    std::vector<Subspace> layer = family == Family::A
                                      ? enumerate_subspaces(n, q, d)
                                      : enumerate_isotropic(2 * n, q, d);
    for (auto& s : layer) sk.vertices.emplace_back(d, std::move(s));
  }

  const int nv = static_cast<int>(sk.vertices.size());
  sk.incidence.assign(nv, {});
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      if (sk.vertices[i].first == sk.vertices[j].first) continue;
      // Vertices are grouped by ascending dim, so j is the larger side.
      if (sk.vertices[j].second.contains(sk.vertices[i].second)) {
        sk.incidence[i].push_back(j);
        sk.incidence[j].push_back(i);
      }
    }

  std::vector<int> x2_start(nv + 1, 0);
  for (int i = 0; i < nv; ++i)
    x2_start[i + 1] = x2_start[i] + static_cast<int>(sk.incidence[i].size());
  for (int i = 0; i < nv; ++i)
    for (int j : sk.incidence[i]) sk.x2.emplace_back(i, j);

  auto x2_index = [&](int tail, int head) {
    const auto& nb = sk.incidence[tail];
    auto it = std::lower_bound(nb.begin(), nb.end(), head);
    return x2_start[tail] + static_cast<int>(it - nb.begin());
  };

  sk.x2_out.assign(sk.x2.size(), {});
  for (std::size_t k = 0; k < sk.x2.size(); ++k) {
    const auto [a, v] = sk.x2[k];
    for (int c : sk.incidence[v])
      if (geodesic_adjacent(family, sk.vertices[a].second,
                            sk.vertices[v].second, sk.vertices[c].second))
        sk.x2_out[k].push_back(x2_index(v, c));
  }
  return sk;
}

std::vector<BigInt> closed_walk_counts(const BuildingSkeleton& sk, int lmax) {
  if (lmax < 1 || lmax > 20)
    throw std::invalid_argument("walk length limit is 20");
  const std::size_t m = sk.x2.size();
  std::vector<BigInt> totals(static_cast<std::size_t>(lmax), BigInt(0));
  std::vector<BigInt> cur(m), nxt(m);
  for (std::size_t source = 0; source < m; ++source) {
    std::fill(cur.begin(), cur.end(), BigInt(0));
    cur[source] = 1;
    for (int step = 1; step <= lmax; ++step) {
      std::fill(nxt.begin(), nxt.end(), BigInt(0));
      for (std::size_t vtx = 0; vtx < m; ++vtx) {
        if (cur[vtx].is_zero()) continue;
        for (int dst : sk.x2_out[vtx]) nxt[dst] += cur[vtx];
      }
      cur.swap(nxt);
      totals[step - 1] += cur[source];
    }
  }
  return totals;
}

std::string skeleton_dump(const BuildingSkeleton& sk) {
  std::ostringstream out;
  out << "# family " << family_to_char(sk.family) << " n " << sk.n << " q "
      << sk.q << " x2_vertices " << sk.x2.size() << "\n";
  for (std::size_t k = 0; k < sk.x2.size(); ++k) {
    const auto [r, s] = sk.x2_type(static_cast<int>(k));
    out << "# " << k << " (" << r << "," << s << ")\n";
  }
  for (std::size_t k = 0; k < sk.x2.size(); ++k)
    for (int dst : sk.x2_out[k]) out << k << " " << dst << "\n";
  return out.str();
}

}  // namespace edgezeta
