#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "polyana/error.hpp"

namespace polyana {

using BigInt = boost::multiprecision::cpp_int;

// Marker for the coefficient domain of rational numbers. All instances compare equal.
struct RationalField {
  friend bool operator==(RationalField, RationalField) { return true; }
};

// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
 public:
  using Context = RationalField;

  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(const BigInt& n) : v_(n) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  static Rational zero(Context = {}) { return Rational(0); }
  static Rational one(Context = {}) { return Rational(1); }
  static Rational from_int(Context, long long n) { return Rational(n); }
  Context context() const { return {}; }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return denominator() == 1; }

  Rational inverse() const;
  Rational pow(long long e) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Residue modulo an odd prime; the denominator must be a unit mod p.
  std::uint32_t mod_p(std::uint32_t p) const;

  std::string to_string() const;
  static Rational parse(const std::string& text);

 private:
  boost::multiprecision::cpp_rational v_{0};
};

std::uint32_t bigint_mod(const BigInt& n, std::uint32_t p);

}  // namespace polyana
