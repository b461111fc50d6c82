#include "edgezeta/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace edgezeta {

Cyclotomic::Cyclotomic(int order, const Rational& a, const Rational& b)
    : order_(order), a_(a), b_(b) {
  if (order < 1 || order > 4) throw std::invalid_argument("unsupported root order");
  if (order <= 2 && b != 0) throw std::invalid_argument("rational order with root coordinate");
  reduce();
}

Cyclotomic Cyclotomic::root_of_unity(int order, long long k) {
  if (order < 1 || order > 4) throw std::invalid_argument("unsupported root order");
  k %= order;
  if (k < 0) k += order;
  switch (order) {
    case 1: return Cyclotomic(Rational(1));
    case 2: return Cyclotomic(Rational(k == 0 ? 1 : -1));
    case 3:
      if (k == 0) return Cyclotomic(Rational(1));
      if (k == 1) return Cyclotomic(3, Rational(0), Rational(1));    // w
      return Cyclotomic(3, Rational(-1), Rational(-1));              // w^2
    default:
      if (k == 0) return Cyclotomic(Rational(1));
      if (k == 1) return Cyclotomic(4, Rational(0), Rational(1));    // i
      if (k == 2) return Cyclotomic(Rational(-1));
      return Cyclotomic(4, Rational(0), Rational(-1));               // -i
  }
}

void Cyclotomic::reduce() {
  if (b_ == 0) order_ = 1;
}

Rational Cyclotomic::as_rational() const {
  if (b_ != 0) throw std::domain_error("not a rational cyclotomic value");
  return a_;
}

Cyclotomic Cyclotomic::conj() const {
  if (b_ == 0) return *this;
  if (order_ == 3) return Cyclotomic(3, a_ - b_, -b_);  // conj(w) = w^2 = -1-w
  return Cyclotomic(4, a_, -b_);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {
// Common order for a binary operation; order-1 values adapt to anything.
int join_orders(int x, int y) {
  if (x == y) return x;
  if (x == 1) return y;
  if (y == 1) return x;
  throw std::domain_error("mixed cyclotomic orders");
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  order_ = join_orders(order_, o.order_);
  a_ += o.a_;
  b_ += o.b_;
  reduce();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  order_ = join_orders(order_, o.order_);
  a_ -= o.a_;
  b_ -= o.b_;
  reduce();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  int ord = join_orders(order_, o.order_);
  Rational a, b;
  if (ord == 3) {
    // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
    a = a_ * o.a_ - b_ * o.b_;
    b = a_ * o.b_ + b_ * o.a_ - b_ * o.b_;
  } else {
    // covers ord 1/2 (b components zero) and ord 4 with i^2 = -1
    a = a_ * o.a_ - b_ * o.b_;
    b = a_ * o.b_ + b_ * o.a_;
  }
  order_ = ord;
  a_ = a;
  b_ = b;
  reduce();
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  return b_ == 0 || order_ == o.order_;
}

std::complex<double> Cyclotomic::to_complex() const {
  double a = static_cast<double>(a_);
  double b = static_cast<double>(b_);
  if (order_ == 3) {
    // w = exp(2 pi i / 3)
    return {a - b / 2.0, b * std::sqrt(3.0) / 2.0};
  }
  if (order_ == 4) return {a, b};
  return {a, 0.0};
}

Eigenvalue::Eigenvalue(int d, int k, long long e)
    : root_order(d), unity_index(k), q_exp_num(e) {
  if (d < 1 || d > 4) throw std::invalid_argument("unsupported root order");
  if (k < 0 || k >= d) throw std::invalid_argument("unity index out of range");
}

Eigenvalue Eigenvalue::pow(unsigned long long l) const {
  Eigenvalue r;
  r.root_order = root_order;
  r.unity_index = static_cast<int>((static_cast<unsigned long long>(unity_index) * l) %
                                   static_cast<unsigned long long>(root_order));
  r.q_exp_num = q_exp_num * static_cast<long long>(l);
  return r;
}

LaurentPoly eigenvalue_power_sum(
    const std::vector<std::pair<Eigenvalue, BigInt>>& lines, unsigned long long l) {
  // Work over the least common root order so exponent numerators align.
  long long d_common = 1;
  for (const auto& [ev, mult] : lines)
    d_common = std::lcm<long long>(d_common, ev.root_order);

  // q-exponent (over d_common) -> accumulated cyclotomic coefficient.
  std::map<long long, Cyclotomic> buckets;
  for (const auto& [ev, mult] : lines) {
    if (mult == 0) continue;
    Eigenvalue p = ev.pow(l);
    long long key = p.q_exp_num * (d_common / p.root_order);
    Cyclotomic contrib = p.unity_part() * Cyclotomic(Rational(mult));
    auto [it, inserted] = buckets.emplace(key, contrib);
    if (!inserted) it->second += contrib;
  }

  LaurentPoly sum = LaurentPoly::zero();
  for (const auto& [e, c] : buckets) {
    if (c.is_zero()) continue;
    if (!c.is_rational()) throw std::domain_error("asymmetric root multiplicities");
    sum += LaurentPoly::term(c.as_rational(), e, d_common);
  }
  return sum;
}

}  // namespace edgezeta
