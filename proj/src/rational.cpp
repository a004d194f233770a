#include "specgraph/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace specgraph {

namespace {

int128 mul(int128 a, int128 b) {
  int128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational: 128-bit multiplication overflow");
  return out;
}

int128 add(int128 a, int128 b) {
  int128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational: 128-bit addition overflow");
  return out;
}

int128 neg(int128 a) {
  int128 out;
  if (__builtin_sub_overflow(int128{0}, a, &out)) throw std::overflow_error("rational: 128-bit negation overflow");
  return out;
}

int128 abs128(int128 a) { return a < 0 ? neg(a) : a; }

int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Rational::Rational(int128 num, int128 den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = neg(num);
    den = neg(den);
  }
  const int128 g = gcd128(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

double Rational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in unsigned space so the most negative value prints correctly.
  uint128 u = negative ? uint128{0} - static_cast<uint128>(v) : static_cast<uint128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  const int128 g = gcd128(den_, o.den_);
  const int128 lhs = mul(num_, o.den_ / g);
  const int128 rhs = mul(o.num_, den_ / g);
  *this = Rational(add(lhs, rhs), mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-reduce first to keep intermediates small.
  const int128 g1 = gcd128(num_, o.den_);
  const int128 g2 = gcd128(o.num_, den_);
  const int128 a = g1 > 1 ? num_ / g1 : num_;
  const int128 d = g1 > 1 ? o.den_ / g1 : o.den_;
  const int128 c = g2 > 1 ? o.num_ / g2 : o.num_;
  const int128 b = g2 > 1 ? den_ / g2 : den_;
  *this = Rational(mul(a, c), mul(b, d));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational: division by zero");
  Rational inv;
  inv.num_ = o.num_ < 0 ? neg(o.den_) : o.den_;
  inv.den_ = abs128(o.num_);
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace specgraph
