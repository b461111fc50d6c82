#include "edgezeta/zeta.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "edgezeta/root_system.hpp"

namespace edgezeta {

std::string SpectralLine::label() const {
  if (!mu) return lambda.str();
  return "(" + lambda.str() + "," + mu->str() + ")";
}

namespace {

long long choose2(long long m) { return m * (m - 1) / 2; }

// Splits a total as evenly as possible between the index-0 slot and the two
// conjugate cube-root slots, under the congruence that pins the solution:
// m0 + 2*mw = total, m0 - mw = total (mod 3), |m0 - mw| <= 1.
std::pair<BigInt, BigInt> balanced_cube_split(const BigInt& total) {
  BigInt t = total / 3;
  int r = BigInt(total % 3).convert_to<int>();
  BigInt m0 = r == 1 ? t + 1 : t;
  BigInt mw = r == 2 ? t + 1 : t;
  // The congruence system has exactly this one nonnegative solution.
  if (m0 + 2 * mw != total) throw std::logic_error("cube split broken");
  BigInt diff = m0 - mw;
  if ((diff - total) % 3 != 0 || diff > 1 || diff < -1)
    throw std::logic_error("cube split congruence broken");
  return {m0, mw};
}

int parity_sign(long long v) { return ((v % 2) + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

ZetaFactor typeA_component(int n, int i, int j, int k) {
  if (i < 1 || j < 1 || k < 1 || i + j + k != n)
    throw std::invalid_argument("invalid composition");

  RootSystem rs = RootSystem::build(Family::A, n - 1);
  ZetaFactor factor;
  factor.orbit = orbit_of_pair(rs, i, i + j);
  factor.c = (i == j && j == k) ? 2 : 6;
  factor.m = 3;
  factor.d = 6 / factor.c;
  if (factor.orbit.size() != factor.c) throw std::logic_error("orbit length mismatch");

  std::vector<int> row_type = {i, j, k};
  std::sort(row_type.begin(), row_type.end(), std::greater<int>());
  long long row_weight = 0;
  for (int t : row_type) row_weight += choose2(t);

  for (const Partition& lam : partitions_of(n)) {
    BigInt count = kostka(lam, row_type);
    if (count == 0) continue;
    SpectralLine line;
    line.lambda = lam;
    long long f = choose2(n) + kappa(lam);
    line.base = Eigenvalue(factor.d, 0, f - 2 * row_weight);
    line.n_total = count;
    line.degree = q_hook_dimension_A(lam);
    if (factor.d == 1) {
      line.splits[0] = count;
    } else {
      auto [m0, mw] = balanced_cube_split(count);
      if (m0 > 0) line.splits[0] = m0;
      if (mw > 0) {
        line.splits[1] = mw;
        line.splits[2] = mw;
      }
    }
    factor.lines.push_back(std::move(line));
  }
  return factor;
}

ZetaFactor typeC_component(int n, int i, int j) {
  if (i < 1 || i > j || i + j > n) throw std::invalid_argument("invalid gap pair");
  int k = n - i - j;

  RootSystem rs = RootSystem::build(Family::C, n);
  ZetaFactor factor;
  factor.orbit = orbit_of_pair(rs, i, i + j);
  factor.c = (i == j) ? 2 : 4;
  factor.m = 4;
  factor.d = 8 / factor.c;
  if (factor.orbit.size() != factor.c) throw std::logic_error("orbit length mismatch");

  long long pl = choose2(i) + choose2(j) + static_cast<long long>(k) * k;

  for (const Bipartition& bp : bipartitions_of(n)) {
    const Partition& lam = bp.plus;
    const Partition& mu = bp.minus;
    BigInt count = 0;
    for (int a = 0; a <= i; ++a) {
      for (int b = 0; b <= j; ++b) {
        if (a + b + k != lam.size()) continue;
        if ((i - a) + (j - b) != mu.size()) continue;
        count += kostka(lam, {a, b, k}) * kostka(mu, {i - a, j - b});
      }
    }
    if (count == 0) continue;

    SpectralLine line;
    line.lambda = lam;
    line.mu = mu;
    long long f = static_cast<long long>(n) * n + (lam.size() - mu.size()) +
                  2 * (kappa(lam) + kappa(mu));
    line.base = Eigenvalue(factor.d, 0, f - 2 * pl);
    line.n_total = count;
    line.degree = generic_degree_C(bp);

    if (factor.d == 2) {
      // Eigenvalues split purely by sign from the minus half's parity.
      line.splits[mu.size() % 2 == 0 ? 0 : 1] = count;
    } else if (mu.size() % 2 == 1) {
      if (count % 2 != 0) throw std::logic_error("split parity violated");
      line.splits[1] = count / 2;
      line.splits[3] = count / 2;
    } else {
      if ((lam.size() - k) % 2 != 0) throw std::logic_error("split parity violated");
      long long ell = (lam.size() - k) / 2;
      long long big_a = std::max<long long>(lam.part(3), lam.part(2) + lam.part(3) - k);
      long long big_b = std::min<long long>({lam.part(2), ell, 2 * ell - lam.part(2)});
      int eps = parity_sign(mu.size() / 2 + mu.part(1)) *
                (parity_sign(big_a) + parity_sign(big_b)) / 2;
      if ((count + eps) % 2 != 0) throw std::logic_error("split parity violated");
      BigInt plus = (count + eps) / 2, minus = (count - eps) / 2;
      if (plus > 0) line.splits[0] = plus;
      if (minus > 0) line.splits[2] = minus;
    }
    factor.lines.push_back(std::move(line));
  }
  return factor;
}

std::vector<ZetaFactor> full_edge_zeta(Family family, int rank) {
  if (family == Family::B) family = Family::C;  // identical Weyl combinatorics
  if (family != Family::A && family != Family::C)
    throw std::invalid_argument("no closed formula in scope");

  RootSystem rs = RootSystem::build(family, rank);
  int n = family == Family::A ? rank + 1 : rank;
  std::vector<ZetaFactor> out;
  for (const TypeOrbit& orbit : enumerate_orbits(rs)) {
    // The enumerated orbit starts at its smallest pair (a, a+gap); recover the
    // gap pattern from it. Any pair of the orbit yields the same factor.
    int a = orbit.cycle[0], b = orbit.cycle[1];
    ZetaFactor factor = family == Family::A ? typeA_component(n, a, b - a, n - b)
                                            : typeC_component(n, a, b - a);
    if (factor.orbit.cycle != orbit.cycle) throw std::logic_error("orbit recovery broken");
    out.push_back(std::move(factor));
  }
  return out;
}

BigInt predicted_closed_walks(const std::vector<ZetaFactor>& factors,
                              const BigInt& q, long long L) {
  if (L < 1) throw std::invalid_argument("walk length must be positive");
  if (q < 2) throw std::invalid_argument("needs concrete q");

  Rational total = 0;
  Rational q_value(q);
  for (const ZetaFactor& factor : factors) {
    if (L % factor.c != 0) continue;
    unsigned long long steps = static_cast<unsigned long long>(L / factor.c);
    std::vector<std::pair<Eigenvalue, BigInt>> weighted;
    for (const SpectralLine& line : factor.lines) {
      Rational degree_value = line.degree.eval(q_value);
      if (denominator(degree_value) != 1 || degree_value <= 0)
        throw std::logic_error("degree must evaluate to a positive integer");
      for (const auto& [unity, mult] : line.splits) {
        weighted.push_back({Eigenvalue(factor.d, unity, line.base.q_exp_num),
                            mult * numerator(degree_value)});
      }
    }
    // Summing before evaluating lets fractional q-powers cancel across lines.
    LaurentPoly trace = eigenvalue_power_sum(weighted, steps);
    total += Rational(factor.c) * trace.eval(q_value);
  }
  if (denominator(total) != 1 || total < 0)
    throw std::logic_error("walk count must be a nonnegative integer");
  return numerator(total);
}

namespace {

// "q", "q^5", "q^0", or "q^(5/2)" for the positive real part q^(num/den).
std::string magnitude_text(long long num, long long den) {
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  std::ostringstream out;
  if (den == 1) {
    if (num == 1)
      out << "q";
    else
      out << "q^" << num;
  } else {
    out << "q^(" << num << "/" << den << ")";
  }
  return out.str();
}

// The "1 - zeta*" head of a factor, for zeta = exp(2*pi*i*k/d).
std::string unity_head(int d, int k) {
  if (k == 0) return "1-";
  if (d == 2) return "1+";
  if (d == 3) return k == 1 ? "1-w*" : "1-w^2*";
  // d == 4
  if (k == 1) return "1-i*";
  if (k == 2) return "1+";
  return "1+i*";
}

std::string cycle_text(const TypeOrbit& orbit) {
  std::ostringstream out;
  out << "[";
  for (size_t t = 0; t < orbit.cycle.size(); ++t) {
    if (t) out << ",";
    out << orbit.cycle[t];
  }
  out << "]";
  return out.str();
}

std::string emit_text(Family family, int rank, const std::vector<ZetaFactor>& factors) {
  if (factors.empty()) return "1\n";
  std::ostringstream out;
  out << "family " << family_to_char(family) << " rank " << rank << "\n";
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    const ZetaFactor& factor = factors[fi];
    if (fi) out << "\n";
    out << "orbit " << cycle_text(factor.orbit) << " c=" << factor.c
        << " m=" << factor.m << " d=" << factor.d << "\n";
    for (const SpectralLine& line : factor.lines) {
      out << line.label() << ":";
      for (const auto& [unity, mult] : line.splits) {
        out << " (" << unity_head(factor.d, unity)
            << magnitude_text(line.base.q_exp_num, factor.d) << "*u^" << factor.c
            << ")^[" << mult.str() << "]x[" << line.degree.str() << "]";
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string emit_json(Family family, int rank, const std::vector<ZetaFactor>& factors) {
  nlohmann::ordered_json doc;
  doc["family"] = std::string(1, family_to_char(family));
  doc["rank"] = rank;
  doc["orbits"] = nlohmann::ordered_json::array();
  for (const ZetaFactor& factor : factors) {
    nlohmann::ordered_json jf;
    jf["cycle"] = factor.orbit.cycle;
    jf["c"] = factor.c;
    jf["m"] = factor.m;
    jf["d"] = factor.d;
    jf["lines"] = nlohmann::ordered_json::array();
    for (const SpectralLine& line : factor.lines) {
      nlohmann::ordered_json jl;
      jl["lambda"] = line.lambda.parts();
      if (line.mu) jl["mu"] = line.mu->parts();
      jl["q_exp"] = {{"num", line.base.q_exp_num}, {"den", factor.d}};
      jl["n"] = line.n_total.convert_to<long long>();
      nlohmann::ordered_json js = nlohmann::ordered_json::object();
      for (const auto& [unity, mult] : line.splits)
        js[std::to_string(unity)] = mult.convert_to<long long>();
      jl["splits"] = js;
      jl["degree"] = line.degree.str();
      jf["lines"].push_back(std::move(jl));
    }
    doc["orbits"].push_back(std::move(jf));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_factored(Family family, int rank,
                          const std::vector<ZetaFactor>& factors,
                          EmitFormat format) {
  if (family == Family::B) family = Family::C;
  return format == EmitFormat::text ? emit_text(family, rank, factors)
                                    : emit_json(family, rank, factors);
}

}  // namespace edgezeta
