#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbiquant {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Every degree, flux and Euler characteristic in the library is a Rational;
/// no bundle computation ever touches floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt num, BigInt den);

  /// Accepts "p/q", "p" or "-p/q" (whitespace not allowed).
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  /// Largest integer not exceeding the value.
  BigInt floor() const;
  /// Representative of the value modulo 1 in [0, 1).
  Rational mod1() const;

  double to_double() const;
  /// Always "p/q", including integers ("2/1") and zero ("0/1").
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor division for signed integers (rounds toward negative infinity).
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// Non-negative remainder in [0, |b|).
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// Overflow-checked int64 helpers; throw Error(Overflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Narrow a BigInt to int64 or throw Error(Overflow).
std::int64_t to_int64(const BigInt& value);

}  // namespace orbiquant
