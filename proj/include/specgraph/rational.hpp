#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace specgraph {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

/// Exact fraction over checked 128-bit integers, always kept reduced with a
/// positive denominator. Any intermediate overflow throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int128 num, int128 den);

  int128 num() const { return num_; }
  int128 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  int128 num_ = 0;
  int128 den_ = 1;
};

std::string int128_to_string(int128 v);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace specgraph
