#include "edgezeta/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgezeta {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument("unknown family");
  }
}

char family_to_char(Family f) { return static_cast<char>(f); }

WeylElement WeylElement::identity(int num_roots) {
  std::vector<int> p(num_roots);
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < static_cast<int>(perm_.size()); ++i)
    if (perm_[i] != i) return false;
  return true;
}

int WeylElement::length() const {
  int n = num_positive(), count = 0;
  for (int i = 0; i < n; ++i)
    if (perm_[i] >= n) ++count;
  return count;
}

WeylElement operator*(const WeylElement& x, const WeylElement& y) {
  if (x.num_roots() != y.num_roots())
    throw std::invalid_argument("elements of different root systems");
  std::vector<int> p(x.perm_.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = x.perm_[y.perm_[i]];
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<int>(i);
  return WeylElement(std::move(p));
}

namespace {

// Cartan matrix with entries cartan[i][j] = <alpha_j, alpha_i^vee>, following
// the diagram labelings documented on RootSystem.
std::vector<std::vector<int>> cartan_matrix(Family family, int n) {
  auto at_least = [&](int lo) {
    if (n < lo) throw std::invalid_argument("rank out of range for family");
  };
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j, int cij = -1, int cji = -1) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  switch (family) {
    case Family::A:
      at_least(1);
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      at_least(2);
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case Family::C:
      at_least(2);
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case Family::D:
      at_least(3);
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("rank out of range for family");
      // chain 1-3-4-5-6(-7)(-8) with 2 attached to 4 (1-based labels)
      std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (n >= 7) edges.push_back({6, 7});
      if (n >= 8) edges.push_back({7, 8});
      for (auto [a, b] : edges) bond(a - 1, b - 1);
      break;
    }
    case Family::F:
      if (n != 4) throw std::invalid_argument("rank out of range for family");
      bond(0, 1);
      bond(1, 2, -1, -2);  // double bond 2=3
      bond(2, 3);
      break;
    case Family::G:
      if (n != 2) throw std::invalid_argument("rank out of range for family");
      bond(0, 1, -1, -3);
      break;
  }
  return c;
}

int height(const std::vector<int>& coords) {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(family, rank);
  rs.cache_ = std::make_shared<Cache>();

  // Close the simple roots under all simple reflections. Every vector stays
  // integral because crystallographic reflections act through the Cartan
  // matrix.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> alpha(rank, 0);
    alpha[i] = 1;
    seen.insert(alpha);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < rank; ++i) {
        int pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += rs.cartan_[i][j] * v[j];
        std::vector<int> w = v;
        w[i] -= pairing;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> positives;
  for (const auto& v : seen) {
    bool pos = true;
    for (int c : v)
      if (c < 0) { pos = false; break; }
    if (pos) positives.push_back(v);
  }
  std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.num_positive_ = static_cast<int>(positives.size());
  if (2 * rs.num_positive_ != static_cast<int>(seen.size()))
    throw std::logic_error("root closure is not symmetric");

  rs.roots_ = positives;
  for (const auto& v : positives) {
    std::vector<int> neg(v.size());
    for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    rs.roots_.push_back(neg);
  }
  for (int r = 0; r < static_cast<int>(rs.roots_.size()); ++r)
    rs.index_[rs.roots_[r]] = r;

  rs.simple_index_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> alpha(rank, 0);
    alpha[i] = 1;
    rs.simple_index_[i] = rs.index_.at(alpha);
  }

  for (int i = 0; i < rank; ++i) {
    std::vector<int> p(rs.roots_.size());
    for (int r = 0; r < static_cast<int>(rs.roots_.size()); ++r) {
      const auto& v = rs.roots_[r];
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += rs.cartan_[i][j] * v[j];
      std::vector<int> w = v;
      w[i] -= pairing;
      p[r] = rs.index_.at(w);
    }
    rs.simple_refl_.push_back(WeylElement(std::move(p)));
  }
  return rs;
}

int RootSystem::root_index(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) throw std::invalid_argument("not a root");
  return it->second;
}

int RootSystem::simple_root_index(int label) const {
  if (label < 1 || label > rank_) throw std::invalid_argument("label out of range");
  return simple_index_[label - 1];
}

WeylElement RootSystem::simple_reflection(int label) const {
  if (label < 1 || label > rank_) throw std::invalid_argument("label out of range");
  return simple_refl_[label - 1];
}

WeylElement RootSystem::longest_parabolic(const std::vector<int>& labels) const {
  uint32_t mask = 0;
  for (int l : labels) {
    if (l < 1 || l > rank_) throw std::invalid_argument("label out of range");
    mask |= 1u << (l - 1);
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->memo.find(mask);
    if (it != cache_->memo.end()) return it->second;
  }

  WeylElement w = identity();
  // Greedy ascent inside the parabolic: as long as some generator's simple
  // root is still sent positive, append it; each step grows the length by 1
  // and the loop ends exactly at the longest element of the parabolic.
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int l = 1; l <= rank_; ++l) {
      if (!(mask & (1u << (l - 1)))) continue;
      if (w.image(simple_index_[l - 1]) < num_positive_) {
        w = w * simple_refl_[l - 1];
        progressed = true;
      }
    }
  }

  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->memo.emplace(mask, w);
  return w;
}

WeylElement RootSystem::longest() const {
  std::vector<int> all(rank_);
  std::iota(all.begin(), all.end(), 1);
  return longest_parabolic(all);
}

int RootSystem::conjugated_simple(const WeylElement& w, int label) const {
  int image = w.image(simple_root_index(label));
  if (image >= num_positive_) image -= num_positive_;  // s_{-a} = s_a
  for (int i = 0; i < rank_; ++i)
    if (simple_index_[i] == image) return i + 1;
  throw std::domain_error("not a simple conjugate");
}

int RootSystem::parabolic_positive_count(const std::vector<int>& labels) const {
  std::vector<bool> in(rank_, false);
  for (int l : labels) {
    if (l < 1 || l > rank_) throw std::invalid_argument("label out of range");
    in[l - 1] = true;
  }
  int count = 0;
  for (int r = 0; r < num_positive_; ++r) {
    bool supported = true;
    for (int j = 0; j < rank_; ++j)
      if (roots_[r][j] != 0 && !in[j]) { supported = false; break; }
    if (supported) ++count;
  }
  return count;
}

std::string RootSystem::describe(const WeylElement& w) const {
  std::ostringstream out;
  for (int l = 1; l <= rank_; ++l) {
    if (l > 1) out << "  ";
    out << "a" << l << "->(";
    const auto& v = roots_[w.image(simple_index_[l - 1])];
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) out << ",";
      out << v[j];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace edgezeta
