#include "edgezeta/luo.hpp"

#include <stdexcept>

namespace edgezeta {

namespace {

class SegmentFactory {
 public:
  SegmentFactory(const RootSystem& rs, const TypeOrbit& orbit) : rs_(rs), orbit_(orbit) {}

  // w_k: longest element of the parabolic omitting t_k.
  WeylElement w(long long k) const {
    return rs_.longest_parabolic(omit({orbit_.label(k)}));
  }
  // w'_k: longest element of the parabolic omitting t_k and t_{k+1}.
  WeylElement w_prime(long long k) const {
    return rs_.longest_parabolic(omit({orbit_.label(k), orbit_.label(k + 1)}));
  }
  // The k-th factor w'_{k-1} w_k, k >= 1.
  WeylElement segment(long long k) const { return w_prime(k - 1) * w(k); }

 private:
  std::vector<int> omit(std::initializer_list<int> skip) const {
    std::vector<int> labels;
    for (int l = 1; l <= rs_.rank(); ++l) {
      bool keep = true;
      for (int s : skip)
        if (l == s) keep = false;
      if (keep) labels.push_back(l);
    }
    return labels;
  }

  const RootSystem& rs_;
  const TypeOrbit& orbit_;
};

// Safety bound on segment scans; every orbit closes its half period well
// before the longest element's length runs out.
long long scan_limit(const RootSystem& rs) { return rs.num_positive() + 2; }

}  // namespace

LuoResult half_period(const RootSystem& rs, const TypeOrbit& orbit) {
  SegmentFactory seg(rs, orbit);
  WeylElement w_s = rs.longest();
  WeylElement target = seg.w_prime(0) * w_s;
  int target_length = target.length();

  LuoResult result;
  result.orbit = orbit;
  WeylElement product = rs.identity();
  int sum = 0;
  for (long long k = 1; k <= scan_limit(rs); ++k) {
    WeylElement factor = seg.segment(k);
    product = product * factor;
    sum += factor.length();
    result.segment_lengths.push_back(factor.length());
    if (sum == target_length) {
      result.m = static_cast<int>(k);
      break;
    }
    if (sum > target_length) throw std::logic_error("length additivity violated");
  }
  if (result.m == 0) throw std::logic_error("half period not found");

  // The factors must multiply out to w'_0 w_S, with lengths adding up; the
  // running sum check above enforced additivity, this enforces the product.
  if (!(product == target)) throw std::logic_error("length additivity violated");

  // Conjugation by the longest element shifts the orbit's label sequence by
  // exactly m positions.
  int c = orbit.size();
  for (int i = 0; i < c; ++i) {
    if (rs.conjugated_simple(w_s, orbit.label(i)) != orbit.label(i + result.m))
      throw std::logic_error("type shift violated");
  }
  if ((2 * result.m) % c != 0) throw std::logic_error("orbit size does not divide twice m");

  result.cycle_word = cycle_word(rs, orbit);
  return result;
}

int verify_u_sequence(const RootSystem& rs, const TypeOrbit& orbit) {
  SegmentFactory seg(rs, orbit);
  WeylElement u = rs.longest() * seg.w_prime(0);
  for (long long n = 1; n <= scan_limit(rs); ++n) {
    u = u * seg.segment(n);
    if (u.is_identity()) return static_cast<int>(n);
  }
  throw std::logic_error("u-sequence failed to reach the identity");
}

WeylElement cycle_word(const RootSystem& rs, const TypeOrbit& orbit) {
  SegmentFactory seg(rs, orbit);
  WeylElement u = rs.identity();
  for (int k = 1; k <= orbit.size(); ++k) u = u * seg.segment(k);
  return u;
}

}  // namespace edgezeta
