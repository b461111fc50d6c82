#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "edgezeta/laurent.hpp"
#include "edgezeta/numbers.hpp"

namespace edgezeta {

// Exact element of Q(zeta_d) for d in {1, 2, 3, 4}, stored as a + b*g where
// g is the canonical generator: nothing for d <= 2 (b is identically zero),
// a primitive cube root of unity w for d = 3, and i for d = 4. Reduction
// rules: w^2 = -1 - w, i^2 = -1.
//
// Values of order <= 2 are plain rationals and mix freely with any order;
// combining a genuine w-component with a genuine i-component is rejected,
// since nothing in scope ever mixes third and fourth roots.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), a_(0), b_(0) {}
  explicit Cyclotomic(const Rational& a) : order_(1), a_(a), b_(0) {}
  Cyclotomic(int order, const Rational& a, const Rational& b);

  // zeta_order^k
  static Cyclotomic root_of_unity(int order, long long k);

  int order() const { return order_; }
  const Rational& rational_coord() const { return a_; }
  const Rational& root_coord() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  // The rational value; throws std::domain_error if a root component remains.
  Rational as_rational() const;

  Cyclotomic conj() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
  bool operator==(const Cyclotomic& o) const;

  // Floating-point image, for cross-checks against numeric evaluation.
  std::complex<double> to_complex() const;

 private:
  void reduce();  // drop to order 1 when the root coordinate vanishes

  int order_;
  Rational a_, b_;
};

// A single eigenvalue of the block operator attached to one type orbit,
// kept in the exact symbolic form  zeta_d^k * q^(E/d)  with d = root_order,
// k = unity_index and E = q_exp_num. Powers stay in the same form.
struct Eigenvalue {
  int root_order = 1;       // d in {1, 2, 3, 4}
  int unity_index = 0;      // k in [0, d)
  long long q_exp_num = 0;  // E; the value is zeta_d^k * q^(E/d)

  Eigenvalue() = default;
  Eigenvalue(int d, int k, long long e);

  Eigenvalue pow(unsigned long long l) const;
  Cyclotomic unity_part() const {
    return Cyclotomic::root_of_unity(root_order, unity_index);
  }
  bool operator==(const Eigenvalue& o) const = default;
};

// Sum of mult * lambda^l over the given eigenvalue lines, computed exactly in
// cyclotomic coefficients over fractional powers of q. The root-of-unity parts
// must cancel to rationals at every surviving q-exponent; a non-cancelling
// root component throws std::domain_error("asymmetric root multiplicities").
LaurentPoly eigenvalue_power_sum(
    const std::vector<std::pair<Eigenvalue, BigInt>>& lines, unsigned long long l);

}  // namespace edgezeta
