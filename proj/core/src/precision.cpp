#include "polylog/precision.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "polylog/error.hpp"

namespace polylog {

Precision::Precision(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < kMinDigits || digits > kMaxDigits) {
    throw ArgumentError("digits must lie in [" + std::to_string(kMinDigits) + ", " +
                        std::to_string(kMaxDigits) + "], got " + std::to_string(digits));
  }
  if (guard < kMinGuard) {
    throw ArgumentError("guard digits must be at least " + std::to_string(kMinGuard));
  }
}

Precision Precision::for_weight(int digits, int weight) {
  return Precision(digits, kMinGuard + 10 * (weight < 0 ? 0 : weight));
}

mpfr_prec_t Precision::working_bits() const noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.321928094887362)) + 8;
}

BigReal::BigReal(const Precision& prec) : prec_(prec) {
  mpfr_init2(value_, prec_.working_bits());
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, const Precision& prec) : prec_(prec) {
  mpfr_init2(value_, prec_.working_bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, const Precision& prec) : prec_(prec) {
  mpfr_init2(value_, prec_.working_bits());
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, const Precision& prec) : prec_(prec) {
  mpfr_init2(value_, prec_.working_bits());
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::parse(const std::string& text, const Precision& prec) {
  BigReal r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') {
    throw ArgumentError("not a decimal number: '" + text + "'");
  }
  return r;
}

BigReal::BigReal(const BigReal& other) : prec_(other.prec_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : prec_(other.prec_) {
  // Steal the limbs and leave `other` with a fresh minimal allocation.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

long BigReal::log10_magnitude() const {
  if (is_zero()) return std::numeric_limits<long>::min() / 2;
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return static_cast<long>(std::floor(std::log10(std::fabs(mant)) + exp2 * 0.30102999566398120)) + 1;
}

void BigReal::require_same(const BigReal& rhs) const {
  if (!(prec_ == rhs.prec_)) {
    throw PrecisionError("operands computed under different precisions (" +
                         std::to_string(prec_.digits()) + "+" + std::to_string(prec_.guard()) +
                         " vs " + std::to_string(rhs.prec_.digits()) + "+" +
                         std::to_string(rhs.prec_.guard()) + ")");
  }
}

BigReal BigReal::abs() const {
  BigReal r(*this);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  require_same(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  require_same(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  require_same(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  require_same(rhs);
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

bool operator==(const BigReal& a, const BigReal& b) {
  a.require_same(b);
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  a.require_same(b);
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal pi(const Precision& prec) {
  BigReal r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal ln(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("ln of a non-positive number");
  BigReal r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal ln(const Rational& x, const Precision& prec) {
  if (x.sign() <= 0) throw DomainError("ln of a non-positive number");
  return ln(BigReal(x, prec));
}

BigReal pow_int(const BigReal& x, long n) {
  if (n < 0) {
    if (x.is_zero()) throw DomainError("zero raised to a negative power");
    return BigReal(1, x.precision()) / pow_int(x, -n);
  }
  BigReal result(1, x.precision());
  BigReal base(x);
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string to_decimal_string(const BigReal& x, int significant) {
  if (significant < 1 || significant > x.precision().digits()) {
    throw ArgumentError("significant digits must lie in [1, " +
                        std::to_string(x.precision().digits()) + "]");
  }
  const auto n = static_cast<std::size_t>(significant);
  if (x.is_zero()) {
    return n == 1 ? "0" : "0." + std::string(n - 1, '0');
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, n, x.get(), MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string out;
  if (digits.front() == '-') {
    out.push_back('-');
    digits.erase(0, 1);
  }
  // value = 0.d1 d2 ... dn * 10^exp10
  const long e = static_cast<long>(exp10);
  if (e >= -4 && e <= static_cast<long>(n)) {
    if (e <= 0) {
      out += "0.";
      out.append(static_cast<std::size_t>(-e), '0');
      out += digits;
    } else {
      out += digits.substr(0, static_cast<std::size_t>(e));
      if (static_cast<std::size_t>(e) < n) {
        out.push_back('.');
        out += digits.substr(static_cast<std::size_t>(e));
      }
    }
  } else {
    out.push_back(digits[0]);
    if (n > 1) {
      out.push_back('.');
      out += digits.substr(1);
    }
    const long shown = e - 1;
    out += shown < 0 ? "e-" : "e+";
    out += std::to_string(shown < 0 ? -shown : shown);
  }
  return out;
}

bool within(const BigReal& a, const BigReal& b, double log10_tol) {
  BigReal diff = (a - b).abs();
  if (diff.is_zero()) return true;
  BigReal bound(a.precision());
  mpfr_set_d(bound.get(), log10_tol, MPFR_RNDN);
  mpfr_exp10(bound.get(), bound.get(), MPFR_RNDN);
  return diff < bound;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << to_decimal_string(x, x.precision().digits());
}

}  // namespace polylog
