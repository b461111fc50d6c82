#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace edgezeta {

// Exact arithmetic substrate. All counting is done with arbitrary-precision
// integers and all polynomial coefficients with arbitrary-precision rationals,
// so no intermediate result is ever rounded or overflowed.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& n) { return n.str(); }

// Renders a rational in lowest terms, "a" when integral, "a/b" otherwise.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// q^e for rational q and (possibly negative) integer exponent e.
Rational rational_pow(const Rational& q, long long e);

// Binomial coefficient C(n, k); zero for k < 0 or k > n.
BigInt binomial(long long n, long long k);

BigInt factorial(long long n);

}  // namespace edgezeta
