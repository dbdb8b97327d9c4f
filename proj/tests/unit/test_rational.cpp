#include "doctest.h"

#include <orbiquant/error.hpp>
#include <orbiquant/rational.hpp>

#include <limits>
#include <sstream>

using namespace orbiquant;

TEST_CASE("rational normalization") {
  CHECK(Rational(4, 6).to_string() == "2/3");
  CHECK(Rational(3, -9).to_string() == "-1/3");
  CHECK(Rational(0, -5).to_string() == "0/1");
  CHECK(Rational(7).to_string() == "7/1");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  for (const char* bad : {"", "1/", "/2", "a/b", "1 /2", "1/0", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(2, 5);
  CHECK(a + b == Rational(11, 15));
  CHECK(a - b == Rational(-1, 15));
  CHECK(a * b == Rational(2, 15));
  CHECK(a / b == Rational(5, 6));
  CHECK(-a == Rational(-1, 3));
  CHECK(a < b);
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), Error);

  // 0.1 + 0.2 == 0.3 holds here
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("rational floor and mod1") {
  CHECK(Rational(7, 3).floor() == 2);
  CHECK(Rational(-7, 3).floor() == -3);
  CHECK(Rational(-6, 3).floor() == -2);
  CHECK(Rational(-1, 3).mod1() == Rational(2, 3));
  CHECK(Rational(5, 2).mod1() == Rational(1, 2));
  CHECK(Rational(4).mod1() == Rational(0));
}

TEST_CASE("rational beyond int64") {
  const Rational big = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(1000);
  CHECK(big / Rational(1000) == Rational(std::numeric_limits<std::int64_t>::max()));
  CHECK_THROWS_AS(to_int64(big.numerator()), Error);
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  std::ostringstream os;
  os << Rational(-4, 15);
  CHECK(os.str() == "-4/15");
}

TEST_CASE("integer helpers") {
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(-3, 3) == -1);
  CHECK(floor_div(5, 3) == 1);
  CHECK(floor_mod(-1, 3) == 2);
  CHECK(floor_mod(7, 3) == 1);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<std::int64_t>::max(), 1), Error);
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<std::int64_t>::max(), 2), Error);
  try {
    checked_mul(std::numeric_limits<std::int64_t>::max(), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}
