#include "edgezeta/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edgezeta {

Rational rational_pow(const Rational& q, long long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("zero to a negative power");
    return Rational(1) / rational_pow(q, -e);
  }
  Rational result(1);
  Rational base = q;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[0] = c;
  return p;
}

LaurentPoly LaurentPoly::term(const Rational& c, long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("exponent denominator must be positive");
  LaurentPoly p;
  p.denom_ = den;
  if (c != 0) p.terms_[num] = c;
  p.normalize();
  return p;
}

Rational LaurentPoly::coeff(long long num, long long den) const {
  // Bring the requested exponent num/den to this polynomial's denominator.
  if (den <= 0) throw std::invalid_argument("exponent denominator must be positive");
  long long g = std::gcd(num, den);
  if (g > 1) { num /= g; den /= g; }
  if (denom_ % den != 0) return Rational(0);
  long long key = num * (denom_ / den);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(long long num, long long den, const Rational& c) {
  if (c == 0) return;
  // Rescale both sides to the common denominator lcm(denom_, den).
  long long g = std::gcd(denom_, den);
  long long l = denom_ / g * den;
  if (l != denom_) {
    long long f = l / denom_;
    std::map<long long, Rational> rescaled;
    for (auto& [e, v] : terms_) rescaled[e * f] = v;
    terms_ = std::move(rescaled);
    denom_ = l;
  }
  long long key = num * (l / den);
  Rational& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
}

void LaurentPoly::normalize() {
  if (terms_.empty()) {
    denom_ = 1;
    return;
  }
  long long g = denom_;
  for (auto& [e, v] : terms_) {
    g = std::gcd(g, e < 0 ? -e : e);
    if (g == 1) break;
  }
  if (g > 1) {
    std::map<long long, Rational> reduced;
    for (auto& [e, v] : terms_) reduced[e / g] = v;
    terms_ = std::move(reduced);
    denom_ /= g;
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, v] : o.terms_) add_term(e, o.denom_, v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, v] : o.terms_) add_term(e, o.denom_, -v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) {
    terms_.clear();
    denom_ = 1;
    return *this;
  }
  long long g = std::gcd(denom_, o.denom_);
  long long l = denom_ / g * o.denom_;
  long long fa = l / denom_, fb = l / o.denom_;
  std::map<long long, Rational> result;
  for (auto& [ea, va] : terms_) {
    for (auto& [eb, vb] : o.terms_) {
      long long e = ea * fa + eb * fb;
      Rational& slot = result[e];
      slot += va * vb;
    }
  }
  for (auto it = result.begin(); it != result.end();) {
    if (it->second == 0) it = result.erase(it);
    else ++it;
  }
  terms_ = std::move(result);
  denom_ = l;
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long long e) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return zero();
  // Shift both to ordinary polynomials with minimum exponent zero, do long
  // division from the top, then shift the quotient back.
  long long g = std::gcd(denom_, divisor.denom_);
  long long l = denom_ / g * divisor.denom_;
  long long fa = l / denom_, fb = l / divisor.denom_;

  std::map<long long, Rational> r;  // remainder-in-progress, exponents over l
  for (auto& [e, v] : terms_) r[e * fa] = v;
  std::map<long long, Rational> d;
  for (auto& [e, v] : divisor.terms_) d[e * fb] = v;

  long long rmin = r.begin()->first;
  long long dmin = d.begin()->first;
  long long shift = rmin - dmin;  // quotient overall exponent shift

  long long dlead = d.rbegin()->first - dmin;  // divisor degree after shift
  const Rational& dlc = d.rbegin()->second;

  std::map<long long, Rational> quot;
  while (!r.empty()) {
    long long rlead = r.rbegin()->first - rmin;
    if (rlead < dlead) throw std::domain_error("not a polynomial");
    long long qe = rlead - dlead;
    Rational qc = r.rbegin()->second / dlc;
    quot[qe] = qc;
    for (auto& [e, v] : d) {
      long long key = (e - dmin) + qe + rmin;
      Rational& slot = r[key];
      slot -= qc * v;
      if (slot == 0) r.erase(key);
    }
  }

  LaurentPoly q;
  q.denom_ = l;
  for (auto& [e, v] : quot) q.terms_[e + shift] = v;
  q.normalize();
  return q;
}

Rational LaurentPoly::eval(const Rational& q_value) const {
  if (q_value <= 0) throw std::invalid_argument("evaluation point must be positive");
  Rational sum(0);
  for (auto& [e, v] : terms_) {
    if (e % denom_ != 0) throw std::domain_error("non-integral exponent");
    sum += v * rational_pow(q_value, e / denom_);
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, v] = *it;
    Rational a = v;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    if (e == 0) {
      out << to_string(a);
      continue;
    }
    if (!unit) out << to_string(a) << "*";
    if (e == denom_) {
      out << "q";
    } else if (e % denom_ == 0) {
      out << "q^" << (e / denom_);
    } else {
      long long num = e, den = denom_;
      long long gg = std::gcd(num < 0 ? -num : num, den);
      out << "q^(" << num / gg << "/" << den / gg << ")";
    }
  }
  return out.str();
}

}  // namespace edgezeta
