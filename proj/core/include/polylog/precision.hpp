#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <mpfr.h>

#include "polylog/rational.hpp"

namespace polylog {

/// Requested decimal digits plus the guard digits every operation carries
/// internally. All arithmetic runs at digits + guard.
class Precision {
 public:
  static constexpr int kMinDigits = 10;
  static constexpr int kMaxDigits = 1000;
  static constexpr int kMinGuard = 20;

  /// Throws ArgumentError when digits is outside [10, 1000] or guard < 20.
  explicit Precision(int digits, int guard = kMinGuard);

  /// Guard sized for sums of the given weight: 20 + 10 * weight.
  static Precision for_weight(int digits, int weight);

  int digits() const noexcept { return digits_; }
  int guard() const noexcept { return guard_; }
  int working_digits() const noexcept { return digits_ + guard_; }
  mpfr_prec_t working_bits() const noexcept;

  /// 10^-(digits + guard/2): the accuracy every exported value meets.
  double log10_tolerance() const noexcept { return -(digits_ + guard_ / 2.0); }

  friend bool operator==(const Precision&, const Precision&) = default;

 private:
  int digits_;
  int guard_;
};

/// Arbitrary-precision real bound to the Precision it was computed under.
/// Binary operations require both operands to share that Precision.
class BigReal {
 public:
  explicit BigReal(const Precision& prec);
  BigReal(long value, const Precision& prec);
  BigReal(const Rational& value, const Precision& prec);
  BigReal(const mpz_class& value, const Precision& prec);
  /// Parses a decimal string ("1.5e-3") at the given precision.
  static BigReal parse(const std::string& text, const Precision& prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  const Precision& precision() const noexcept { return prec_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal exponent e with 10^(e-1) <= |x| < 10^e, approximately.
  long log10_magnitude() const;

  BigReal abs() const;
  BigReal operator-() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  void require_same(const BigReal& rhs) const;

  Precision prec_;
  mpfr_t value_;
};

/// pi at working precision.
BigReal pi(const Precision& prec);

/// Natural logarithm; DomainError unless x > 0.
BigReal ln(const BigReal& x);
BigReal ln(const Rational& x, const Precision& prec);

/// x^n by binary powering. DomainError for 0 raised to a negative power.
BigReal pow_int(const BigReal& x, long n);

/// Round-to-nearest rendering with `significant` digits. Positional
/// notation for moderate magnitudes, otherwise "d.ddde+N". ArgumentError
/// unless 1 <= significant <= x.precision().digits().
std::string to_decimal_string(const BigReal& x, int significant);

/// True when |a - b| < 10^log10_tol.
bool within(const BigReal& a, const BigReal& b, double log10_tol);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace polylog
