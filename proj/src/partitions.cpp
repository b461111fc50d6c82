#include "edgezeta/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgezeta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> grow = [&](int remaining, int cap) {
    if (remaining == 0) {
      std::vector<int> parts = current;
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      out.push_back(Partition(parts));
      return;
    }
    for (int next = std::min(remaining, cap); next >= 1; --next) {
      current.push_back(next);
      grow(remaining - next, next);
      current.pop_back();
    }
  };
  grow(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int a = 0; a <= n; ++a) {
    for (const Partition& plus : partitions_of(a))
      for (const Partition& minus : partitions_of(n - a))
        out.push_back({plus, minus});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  int height = p.length();
  if (height == 0) return Partition();
  cols.resize(p.part(1), 0);
  for (int i = 1; i <= height; ++i)
    for (int j = 0; j < p.part(i); ++j) cols[j] += 1;
  return Partition(cols);
}

namespace {
long long choose2(long long m) { return m * (m - 1) / 2; }
}  // namespace

long long kappa(const Partition& p) {
  Partition q = conjugate(p);
  long long total = 0;
  for (int x : p.parts()) total += choose2(x);
  for (int x : q.parts()) total -= choose2(x);
  return total;
}

BigInt kostka(const Partition& shape, const std::vector<int>& content) {
  long long content_sum = std::accumulate(content.begin(), content.end(), 0LL);
  for (int c : content)
    if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
  if (content_sum != shape.size())
    throw std::invalid_argument("content does not sum to the shape size");

  int rows = shape.length();
  if (rows == 0) return 1;
  int values = static_cast<int>(content.size());
  std::vector<int> remaining = content;
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(shape.part(r + 1), 0);

  BigInt count = 0;
  std::function<void(int, int)> place = [&](int r, int c) {
    if (r == rows) {
      count += 1;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape.part(r + 1)) {
      nr = r + 1;
      nc = 0;
    }
    int low = 1;
    if (c > 0) low = std::max(low, fill[r][c - 1]);        // weakly increasing rows
    if (r > 0 && c < shape.part(r)) low = std::max(low, fill[r - 1][c] + 1);  // strict columns
    for (int v = low; v <= values; ++v) {
      if (remaining[v - 1] == 0) continue;
      remaining[v - 1] -= 1;
      fill[r][c] = v;
      place(nr, nc);
      remaining[v - 1] += 1;
    }
    fill[r][c] = 0;
  };
  place(0, 0);
  return count;
}

int pieri_coefficient(const Partition& nu, const Partition& mu, int k) {
  if (k < 0) throw std::invalid_argument("strip size must be nonnegative");
  if (nu.size() != mu.size() + k)
    throw std::invalid_argument("sizes incompatible with the strip size");
  int rows = std::max(nu.length(), mu.length());
  for (int i = 1; i <= rows; ++i) {
    if (nu.part(i) < mu.part(i)) return 0;          // containment
    if (i >= 2 && mu.part(i - 1) < nu.part(i)) return 0;  // horizontal strip
  }
  return 1;
}

BigInt kostka_via_pieri(const Partition& shape, const std::vector<int>& content) {
  long long content_sum = std::accumulate(content.begin(), content.end(), 0LL);
  for (int c : content)
    if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
  if (content_sum != shape.size())
    throw std::invalid_argument("content does not sum to the shape size");

  std::map<Partition, BigInt> layer;
  layer[Partition()] = 1;
  int grown = 0;
  for (int k : content) {
    grown += k;
    std::map<Partition, BigInt> next;
    std::vector<Partition> candidates = partitions_of(grown);
    for (const auto& [mu, ways] : layer)
      for (const Partition& nu : candidates)
        if (pieri_coefficient(nu, mu, k)) next[nu] += ways;
    layer = std::move(next);
  }
  auto it = layer.find(shape);
  return it == layer.end() ? BigInt(0) : it->second;
}

int hook_length(const Partition& p, int r, int c) {
  Partition q = conjugate(p);
  return p.part(r + 1) - c + q.part(c + 1) - r - 1;
}

BigInt hook_dimension(const Partition& p) {
  BigInt num = factorial(p.size());
  BigInt den = 1;
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p.part(r + 1); ++c) den *= hook_length(p, r, c);
  return num / den;
}

LaurentPoly q_hook_dimension_A(const Partition& p) {
  long long shift = 0;
  for (int i = 1; i <= p.length(); ++i) shift += static_cast<long long>(i - 1) * p.part(i);
  LaurentPoly num = LaurentPoly::q_power(shift);
  for (int i = 1; i <= p.size(); ++i)
    num *= LaurentPoly::q_power(i) - LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p.part(r + 1); ++c)
      den *= LaurentPoly::q_power(hook_length(p, r, c)) - LaurentPoly::one();
  return num.divide_exact(den);
}

BigInt wn_dimension(const Bipartition& bp) {
  return binomial(bp.size(), bp.minus.size()) * hook_dimension(bp.plus) *
         hook_dimension(bp.minus);
}

Symbol symbol_of(const Bipartition& bp, int k) {
  if (k < std::max(bp.plus.length(), bp.minus.length() + 1))
    throw std::invalid_argument("k too small");
  Symbol s;
  for (int i = 1; i <= k; ++i) s.X.push_back(bp.plus.part(i) - i + k);
  for (int j = 1; j <= k - 1; ++j) s.Y.push_back(bp.minus.part(j) - j + (k - 1));
  return s;
}

namespace {
std::vector<std::pair<int, int>> row_pairs(const std::vector<int>& tops,
                                           const std::vector<int>& avoid) {
  std::set<int> avoid_set(avoid.begin(), avoid.end());
  std::vector<std::pair<int, int>> out;
  for (int c : tops)
    for (int b = 0; b < c; ++b)
      if (!avoid_set.count(b)) out.push_back({b, c});
  return out;
}
}  // namespace

std::vector<std::pair<int, int>> hooks(const Symbol& s) {
  auto out = row_pairs(s.X, s.X);
  auto more = row_pairs(s.Y, s.Y);
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> cohooks(const Symbol& s) {
  auto out = row_pairs(s.X, s.Y);
  auto more = row_pairs(s.Y, s.X);
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  return out;
}

long long a_stat(const Symbol& s) {
  std::vector<int> all = s.X;
  all.insert(all.end(), s.Y.begin(), s.Y.end());
  long long total = 0;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) total += std::min(all[i], all[j]);
  long long entries = static_cast<long long>(all.size());
  for (long long i = 1; entries - 2 * i >= 2; ++i) total -= choose2(entries - 2 * i);
  return total;
}

long long b_stat(const Symbol& s) {
  if (s.X == s.Y) return 0;
  std::set<int> x(s.X.begin(), s.X.end());
  long long common = 0;
  for (int v : s.Y) common += x.count(v);
  long long entries = static_cast<long long>(s.X.size() + s.Y.size());
  return (entries - 1) / 2 - common;
}

LaurentPoly generic_degree_C(const Bipartition& bp) {
  return generic_degree_C(bp, std::max({bp.plus.length(), bp.minus.length() + 1, 1}));
}

LaurentPoly generic_degree_C(const Bipartition& bp, int k) {
  Symbol s = symbol_of(bp, k);
  int n = bp.size();

  LaurentPoly num = LaurentPoly::q_power(a_stat(s));
  for (int i = 1; i <= n; ++i)
    num *= LaurentPoly::q_power(2 * i) - LaurentPoly::one();

  LaurentPoly den = LaurentPoly::one();
  for (auto [b, c] : hooks(s)) den *= LaurentPoly::q_power(c - b) - LaurentPoly::one();
  for (auto [b, c] : cohooks(s)) den *= LaurentPoly::q_power(c - b) + LaurentPoly::one();

  LaurentPoly quotient = num.divide_exact(den);
  Rational half_power = rational_pow(Rational(1, 2), b_stat(s));
  return LaurentPoly::constant(half_power) * quotient;
}

}  // namespace edgezeta
