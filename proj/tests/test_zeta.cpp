#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "edgezeta/zeta.hpp"

using namespace edgezeta;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const SpectralLine& line_for(const ZetaFactor& factor, const Partition& lambda,
                             const Partition* mu = nullptr) {
  for (const SpectralLine& line : factor.lines) {
    if (line.lambda == lambda && (!mu || (line.mu && *line.mu == *mu))) return line;
  }
  REQUIRE(false);
  return factor.lines.front();
}

// 1 + q + ... + q^(t-1)
LaurentPoly q_int(int t) {
  LaurentPoly out = LaurentPoly::zero();
  for (int s = 0; s < t; ++s) out += LaurentPoly::q_power(s);
  return out;
}

// Poincare polynomial of the symmetric group S_t.
LaurentPoly poincare_sym(int t) {
  LaurentPoly out = LaurentPoly::one();
  for (int s = 2; s <= t; ++s) out *= q_int(s);
  return out;
}

// Poincare polynomial of the signed-permutation group W_t.
LaurentPoly poincare_signed(int t) {
  LaurentPoly out = LaurentPoly::one();
  for (int s = 1; s <= t; ++s) out *= q_int(2 * s);
  return out;
}

void check_factor_invariants(const ZetaFactor& factor) {
  CHECK(factor.d * factor.c == 2 * factor.m);
  CHECK(factor.orbit.size() == factor.c);
  for (const SpectralLine& line : factor.lines) {
    CHECK(line.n_total > 0);
    BigInt across = 0;
    for (const auto& [unity, mult] : line.splits) {
      CHECK(mult > 0);
      CHECK(unity >= 0);
      CHECK(unity < factor.d);
      across += mult;
      // Conjugation symmetry: the mirror index carries the same multiplicity.
      int mirror = (factor.d - unity) % factor.d;
      auto it = line.splits.find(mirror);
      REQUIRE(it != line.splits.end());
      CHECK(it->second == mult);
      // The d-th power of every eigenvalue is an integer power of q.
      Eigenvalue value(factor.d, unity, line.base.q_exp_num);
      Eigenvalue powered = value.pow(factor.d);
      CHECK(powered.unity_index == 0);
      CHECK(powered.q_exp_num % factor.d == 0);
    }
    CHECK(across == line.n_total);
    CHECK(line.base.unity_index == 0);
    CHECK(line.base.root_order == factor.d);
  }
}

}  // namespace

TEST_CASE("balanced linear component: smallest case") {
  ZetaFactor f = typeA_component(3, 1, 1, 1);
  CHECK(f.c == 2);
  CHECK(f.m == 3);
  CHECK(f.d == 3);
  CHECK(f.orbit.cycle == std::vector<int>{1, 2, 1});
  REQUIRE(f.lines.size() == 3);

  const SpectralLine& steinberg = line_for(f, P({1, 1, 1}));
  CHECK(steinberg.base.q_exp_num == 0);
  CHECK(steinberg.n_total == 1);
  CHECK(steinberg.splits == std::map<int, BigInt>{{0, 1}});
  CHECK(steinberg.degree == LaurentPoly::q_power(3));

  const SpectralLine& middle = line_for(f, P({2, 1}));
  CHECK(middle.base.q_exp_num == 3);
  CHECK(middle.n_total == 2);
  // The two eigenvalues sit on the two primitive cube roots, none on 1.
  CHECK(middle.splits == std::map<int, BigInt>{{1, 1}, {2, 1}});

  const SpectralLine& trivial = line_for(f, P({3}));
  CHECK(trivial.base.q_exp_num == 6);  // the eigenvalue is q^(6/3) = q^2
  CHECK(trivial.splits == std::map<int, BigInt>{{0, 1}});
  CHECK(trivial.degree == LaurentPoly::one());
}

TEST_CASE("generic linear component has a trivial split") {
  ZetaFactor f = typeA_component(6, 1, 2, 3);
  CHECK(f.c == 6);
  CHECK(f.d == 1);
  for (const SpectralLine& line : f.lines) {
    REQUIRE(line.splits.size() == 1);
    CHECK(line.splits.begin()->first == 0);
    CHECK(line.splits.begin()->second == line.n_total);
  }
  CHECK_THROWS_AS(typeA_component(3, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(typeA_component(4, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("balanced split is as even as possible") {
  // K = 3t, 3t+1, 3t+2 distribute as (t,t,t), (t+1,t,t), (t,t+1,t+1).
  for (int n : {3, 6}) {
    int g = n / 3;
    ZetaFactor f = typeA_component(n, g, g, g);
    for (const SpectralLine& line : f.lines) {
      BigInt m0 = 0, mw = 0, mw2 = 0;
      if (auto it = line.splits.find(0); it != line.splits.end()) m0 = it->second;
      if (auto it = line.splits.find(1); it != line.splits.end()) mw = it->second;
      if (auto it = line.splits.find(2); it != line.splits.end()) mw2 = it->second;
      CHECK(mw == mw2);
      CHECK(m0 + mw + mw2 == line.n_total);
      BigInt diff = m0 - mw;
      CHECK(diff >= -1);
      CHECK(diff <= 1);
      CHECK((diff - line.n_total) % 3 == 0);
    }
  }
}

TEST_CASE("symplectic rank-2 component") {
  ZetaFactor f = typeC_component(2, 1, 1);
  CHECK(f.c == 2);
  CHECK(f.m == 4);
  CHECK(f.d == 4);
  CHECK(f.orbit.cycle == std::vector<int>{1, 2, 1});
  REQUIRE(f.lines.size() == 5);

  Partition empty;
  Partition one = P({1});
  Partition col2 = P({1, 1});
  const SpectralLine& st = line_for(f, empty, &col2);
  CHECK(st.base.q_exp_num == 0);
  CHECK(st.splits == std::map<int, BigInt>{{0, 1}});
  CHECK(st.degree == LaurentPoly::q_power(4));

  const SpectralLine& mixed = line_for(f, one, &one);
  CHECK(mixed.base.q_exp_num == 4);
  CHECK(mixed.n_total == 2);
  CHECK(mixed.splits == std::map<int, BigInt>{{1, 1}, {3, 1}});

  CHECK_THROWS_AS(typeC_component(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(typeC_component(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(typeC_component(3, 2, 2), std::invalid_argument);
}

TEST_CASE("symplectic generic components split purely by sign") {
  for (auto [n, i, j] : std::vector<std::array<int, 3>>{
           {3, 1, 2}, {4, 1, 2}, {4, 1, 3}, {5, 2, 3}, {5, 1, 4}}) {
    ZetaFactor f = typeC_component(n, i, j);
    CHECK(f.c == 4);
    CHECK(f.d == 2);
    for (const SpectralLine& line : f.lines) {
      REQUIRE(line.splits.size() == 1);
      REQUIRE(line.mu.has_value());
      int expected = line.mu->size() % 2 == 0 ? 0 : 1;
      CHECK(line.splits.begin()->first == expected);
      CHECK(line.splits.begin()->second == line.n_total);
    }
  }
}

TEST_CASE("factor invariants across both families") {
  for (int rank = 2; rank <= 6; ++rank)
    for (const ZetaFactor& f : full_edge_zeta(Family::A, rank)) check_factor_invariants(f);
  for (int rank = 2; rank <= 6; ++rank)
    for (const ZetaFactor& f : full_edge_zeta(Family::C, rank)) check_factor_invariants(f);
}

TEST_CASE("factor lists per family") {
  CHECK(full_edge_zeta(Family::A, 2).size() == 1);
  CHECK(full_edge_zeta(Family::C, 2).size() == 1);
  auto c3 = full_edge_zeta(Family::C, 3);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].c == 2);
  CHECK(c3[0].orbit.cycle == std::vector<int>{1, 2, 1});
  CHECK(c3[1].c == 4);
  CHECK(c3[1].orbit.cycle == std::vector<int>{1, 3, 2, 3, 1});
  CHECK(c3[1].lines.size() == 8);

  // The second family label is an alias: identical Weyl combinatorics.
  CHECK(emit_factored(Family::B, 3, full_edge_zeta(Family::B, 3), EmitFormat::text) ==
        emit_factored(Family::C, 3, c3, EmitFormat::text));

  CHECK_THROWS_WITH_AS(full_edge_zeta(Family::D, 4), "no closed formula in scope",
                       std::invalid_argument);
  CHECK_THROWS_AS(full_edge_zeta(Family::E, 6), std::invalid_argument);
  CHECK_THROWS_AS(full_edge_zeta(Family::F, 4), std::invalid_argument);
  CHECK_THROWS_AS(full_edge_zeta(Family::G, 2), std::invalid_argument);
}

TEST_CASE("a degree polynomial belongs to the label, not the orbit") {
  for (int rank : {3, 4, 5}) {
    auto factors = full_edge_zeta(Family::C, rank);
    std::map<std::string, LaurentPoly> seen;
    for (const ZetaFactor& f : factors) {
      for (const SpectralLine& line : f.lines) {
        auto [it, fresh] = seen.insert({line.label(), line.degree});
        if (!fresh) CHECK(it->second == line.degree);
      }
    }
  }
}

TEST_CASE("multiplicity-weighted degrees add up to the flag count") {
  // Summing n * degree over the lines of one orbit factor gives the number of
  // chambers of that shape: the Poincare-polynomial ratio of W over the
  // two-node-deleted parabolic.
  for (int rank = 2; rank <= 6; ++rank) {
    int n = rank + 1;
    for (const ZetaFactor& f : full_edge_zeta(Family::A, rank)) {
      int a = f.orbit.cycle[0], b = f.orbit.cycle[1];
      int i = a, j = b - a, k = n - b;
      LaurentPoly flags = poincare_sym(n).divide_exact(
          poincare_sym(i) * poincare_sym(j) * poincare_sym(k));
      LaurentPoly total = LaurentPoly::zero();
      for (const SpectralLine& line : f.lines)
        total += LaurentPoly::constant(Rational(line.n_total)) * line.degree;
      CHECK(total == flags);
    }
  }
  for (int rank = 2; rank <= 6; ++rank) {
    for (const ZetaFactor& f : full_edge_zeta(Family::C, rank)) {
      int a = f.orbit.cycle[0], b = f.orbit.cycle[1];
      int i = a, j = b - a, k = rank - b;
      LaurentPoly flags = poincare_signed(rank).divide_exact(
          poincare_sym(i) * poincare_sym(j) * poincare_signed(k));
      LaurentPoly total = LaurentPoly::zero();
      for (const SpectralLine& line : f.lines)
        total += LaurentPoly::constant(Rational(line.n_total)) * line.degree;
      CHECK(total == flags);
    }
  }
}

TEST_CASE("factored text output") {
  CHECK(emit_factored(Family::C, 2, {}, EmitFormat::text) == "1\n");

  std::string a2 = emit_factored(Family::A, 2, full_edge_zeta(Family::A, 2), EmitFormat::text);
  CHECK(a2 ==
        "family A rank 2\n"
        "orbit [1,2,1] c=2 m=3 d=3\n"
        "(1,1,1): (1-q^0*u^2)^[1]x[q^3]\n"
        "(2,1): (1-w*q*u^2)^[1]x[q^2+q] (1-w^2*q*u^2)^[1]x[q^2+q]\n"
        "(3): (1-q^2*u^2)^[1]x[1]\n");

  std::string c2 = emit_factored(Family::C, 2, full_edge_zeta(Family::C, 2), EmitFormat::text);
  CHECK(c2 ==
        "family C rank 2\n"
        "orbit [1,2,1] c=2 m=4 d=4\n"
        "((),(1,1)): (1-q^0*u^2)^[1]x[q^4]\n"
        "((),(2)): (1+q*u^2)^[1]x[1/2*q^3+1/2*q]\n"
        "((1),(1)): (1-i*q*u^2)^[1]x[1/2*q^3+q^2+1/2*q] (1+i*q*u^2)^[1]x[1/2*q^3+q^2+1/2*q]\n"
        "((1,1),()): (1+q*u^2)^[1]x[1/2*q^3+1/2*q]\n"
        "((2),()): (1-q^2*u^2)^[1]x[1]\n");

  std::string c3 = emit_factored(Family::C, 3, full_edge_zeta(Family::C, 3), EmitFormat::text);
  // The generic orbit's block reproduces the published eight rows.
  std::string generic_block =
      "orbit [1,3,2,3,1] c=4 m=4 d=2\n"
      "((),(2,1)): (1+q^2*u^4)^[1]x[1/2*q^8+1/2*q^7+1/2*q^5+1/2*q^4]\n"
      "((),(3)): (1+q^5*u^4)^[1]x[1/2*q^5-1/2*q^4+q^3-1/2*q^2+1/2*q]\n"
      "((1),(1,1)): (1-q^2*u^4)^[1]x[1/2*q^8+1/2*q^7+q^6+1/2*q^5+1/2*q^4]\n"
      "((1),(2)): (1-q^4*u^4)^[2]x[q^6+q^4+q^2]\n"
      "((1,1),(1)): (1+q^3*u^4)^[1]x[q^7+q^5+q^3]\n"
      "((2),(1)): (1+q^5*u^4)^[2]x[1/2*q^5+1/2*q^4+q^3+1/2*q^2+1/2*q]\n"
      "((2,1),()): (1-q^5*u^4)^[1]x[1/2*q^5+1/2*q^4+1/2*q^2+1/2*q]\n"
      "((3),()): (1-q^8*u^4)^[1]x[1]\n";
  CHECK(c3.find(generic_block) != std::string::npos);
  // The special orbit carries fractional magnitudes whose 4th power is q^int.
  CHECK(c3.find("((1,1),(1)): (1-i*q^(3/2)*u^2)^[1]x[q^7+q^5+q^3] "
                "(1+i*q^(3/2)*u^2)^[1]x[q^7+q^5+q^3]\n") != std::string::npos);
  CHECK(c3.find("((2,1),()): (1-q^(5/2)*u^2)^[1]x[") != std::string::npos);
}

TEST_CASE("machine-readable output round-trips") {
  std::string text = emit_factored(Family::C, 3, full_edge_zeta(Family::C, 3), EmitFormat::json);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["family"] == "C");
  CHECK(doc["rank"] == 3);
  REQUIRE(doc["orbits"].size() == 2);
  CHECK(doc["orbits"][1]["cycle"] == nlohmann::json({1, 3, 2, 3, 1}));
  CHECK(doc["orbits"][1]["c"] == 4);
  CHECK(doc["orbits"][1]["m"] == 4);
  CHECK(doc["orbits"][1]["d"] == 2);
  bool found = false;
  for (const auto& jl : doc["orbits"][1]["lines"]) {
    if (jl["lambda"] == nlohmann::json({1}) && jl["mu"] == nlohmann::json({2})) {
      found = true;
      CHECK(jl["q_exp"]["num"] == 8);
      CHECK(jl["q_exp"]["den"] == 2);
      CHECK(jl["n"] == 2);
      CHECK(jl["splits"] == nlohmann::json({{"0", 2}}));
      CHECK(jl["degree"] == "q^6+q^4+q^2");
    }
  }
  CHECK(found);

  // Linear-family lines carry no second label half.
  nlohmann::json a2 =
      nlohmann::json::parse(emit_factored(Family::A, 2, full_edge_zeta(Family::A, 2),
                                          EmitFormat::json));
  for (const auto& jl : a2["orbits"][0]["lines"]) CHECK_FALSE(jl.contains("mu"));
  CHECK(a2["orbits"][0]["lines"][1]["splits"] == nlohmann::json({{"1", 1}, {"2", 1}}));

  CHECK(nlohmann::json::parse(emit_factored(Family::C, 2, {}, EmitFormat::json))["orbits"]
            .empty());
}

TEST_CASE("predicted closed-walk counts at small prime powers") {
  auto a2 = full_edge_zeta(Family::A, 2);
  CHECK(predicted_closed_walks(a2, 2, 1) == 0);
  CHECK(predicted_closed_walks(a2, 2, 2) == 0);
  CHECK(predicted_closed_walks(a2, 2, 4) == 0);
  CHECK(predicted_closed_walks(a2, 2, 6) == 336);

  auto a3 = full_edge_zeta(Family::A, 3);
  CHECK(predicted_closed_walks(a3, 2, 6) == 20160);
  CHECK(predicted_closed_walks(a3, 2, 12) == 7015680);

  auto c2 = full_edge_zeta(Family::C, 2);
  for (long long l : {1, 3, 5, 7}) CHECK(predicted_closed_walks(c2, 2, l) == 0);
  CHECK(predicted_closed_walks(c2, 2, 2) == 0);
  CHECK(predicted_closed_walks(c2, 2, 4) == 0);
  CHECK(predicted_closed_walks(c2, 2, 6) == 0);
  CHECK(predicted_closed_walks(c2, 2, 8) == 1440);

  CHECK_THROWS_WITH_AS(predicted_closed_walks(a2, 1, 6), "needs concrete q",
                       std::invalid_argument);
  CHECK_THROWS_AS(predicted_closed_walks(a2, 2, 0), std::invalid_argument);
}

TEST_CASE("predicted counts are nonnegative integers across ranks") {
  for (int rank = 2; rank <= 5; ++rank) {
    auto fa = full_edge_zeta(Family::A, rank);
    auto fc = full_edge_zeta(Family::C, rank);
    for (BigInt q : {2, 3}) {
      for (long long l = 1; l <= 16; ++l) {
        CHECK(predicted_closed_walks(fa, q, l) >= 0);
        CHECK(predicted_closed_walks(fc, q, l) >= 0);
      }
    }
  }
}
