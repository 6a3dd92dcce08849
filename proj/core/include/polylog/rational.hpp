#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polylog {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& value) : value_(value) {}
  explicit Rational(mpq_class value);

  /// Parses "p", "p/q" or a plain decimal such as "-1.25" exactly.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int exponent) const;
  double to_double() const { return value_.get_d(); }

  /// "p" for integers and "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

}  // namespace polylog
