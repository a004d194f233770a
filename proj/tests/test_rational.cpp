#include <limits>
#include <sstream>

#include "doctest.h"
#include "specgraph/rational.hpp"

using specgraph::int128;
using specgraph::Rational;

TEST_CASE("construction reduces and normalizes sign") {
  const Rational a(int128{6}, int128{-8});
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(a.to_string() == "-3/4");
  CHECK(Rational(int128{0}, int128{-5}).to_string() == "0");
  CHECK(Rational(7).is_integer());
  CHECK_THROWS_AS(Rational(int128{1}, int128{0}), std::domain_error);
}

TEST_CASE("field operations") {
  const Rational half(int128{1}, int128{2});
  const Rational third(int128{1}, int128{3});
  CHECK(half + third == Rational(int128{5}, int128{6}));
  CHECK(half - third == Rational(int128{1}, int128{6}));
  CHECK(half * third == Rational(int128{1}, int128{6}));
  CHECK(half / third == Rational(int128{3}, int128{2}));
  CHECK(-half == Rational(int128{-1}, int128{2}));
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
  CHECK(Rational(int128{30}, int128{7}).to_double() == doctest::Approx(4.285714285714286));
}

TEST_CASE("ordering") {
  const Rational a(int128{-7}, int128{3});
  const Rational b(int128{-9}, int128{4});
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a <= a);
  CHECK(Rational(int128{224}, int128{9}) > Rational(24));
  CHECK((Rational(2) <=> Rational(int128{4}, int128{2})) == std::strong_ordering::equal);
}

TEST_CASE("overflow is reported, not wrapped") {
  const int128 big = static_cast<int128>(std::numeric_limits<std::int64_t>::max()) << 60;
  const Rational x(big, int128{1});
  CHECK_THROWS_AS(x * x, std::overflow_error);
  CHECK_THROWS_AS(x + x + x + x + x + x + x + x + x + x + x + x + x + x + x + x + x + x + x + x, std::overflow_error);
}

TEST_CASE("printing large values") {
  const int128 big = static_cast<int128>(1) << 100;
  CHECK(specgraph::int128_to_string(big) == "1267650600228229401496703205376");
  CHECK(specgraph::int128_to_string(-big) == "-1267650600228229401496703205376");
  std::ostringstream os;
  os << Rational(int128{-3}, int128{9});
  CHECK(os.str() == "-1/3");
}
