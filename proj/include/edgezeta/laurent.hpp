#pragma once

#include <map>
#include <string>

#include "edgezeta/numbers.hpp"

namespace edgezeta {

// Laurent polynomial in a formal variable q, with exponents allowed to be
// rationals of a fixed small denominator: a term maps the integer e to a
// nonzero rational coefficient c and means c * q^(e/d), where d >= 1 is the
// global exponent denominator of the polynomial.
//
// The denominator is kept explicit rather than clearing it into a substituted
// variable, because downstream consumers need to read off exact fractional
// q-exponents. Normalization divides d and every exponent by their common gcd,
// so equal values always compare equal regardless of how they were built
// (q^(2/2) == q^1).
class LaurentPoly {
 public:
  LaurentPoly() : denom_(1) {}

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return constant(Rational(1)); }
  static LaurentPoly constant(const Rational& c);
  // c * q^(num/den)
  static LaurentPoly term(const Rational& c, long long num, long long den = 1);
  // q^(num/den)
  static LaurentPoly q_power(long long num, long long den = 1) {
    return term(Rational(1), num, den);
  }

  bool is_zero() const { return terms_.empty(); }
  long long denom() const { return denom_; }
  const std::map<long long, Rational>& terms() const { return terms_; }

  // True when every exponent is an integer (d == 1 after normalization).
  bool has_integral_exponents() const { return denom_ == 1; }

  // Coefficient of q^(num/den); zero if absent.
  Rational coeff(long long num, long long den = 1) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  bool operator==(const LaurentPoly& o) const {
    return denom_ == o.denom_ && terms_ == o.terms_;
  }

  LaurentPoly pow(unsigned long long e) const;

  // Exact quotient this / divisor; throws std::domain_error("not a polynomial")
  // when the division leaves a remainder.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Substitutes a concrete positive value for q. Every exponent must be an
  // integer; otherwise throws std::domain_error("non-integral exponent").
  Rational eval(const Rational& q_value) const;

  // Sparse text form: terms in decreasing exponent, "c*q^e" with the
  // coefficient as a reduced fraction, unit coefficients elided, and the
  // exponent printed as an integer when d divides it ("q^(5/2)" otherwise).
  std::string str() const;

 private:
  void add_term(long long num, long long den, const Rational& c);
  void normalize();

  long long denom_;
  std::map<long long, Rational> terms_;  // exponent numerator -> coefficient
};

}  // namespace edgezeta
