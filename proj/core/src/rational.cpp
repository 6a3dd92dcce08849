#include "polylog/rational.hpp"

#include <cctype>
#include <ostream>

#include "polylog/error.hpp"

namespace polylog {

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto bad = [&] { return ArgumentError("not a rational literal: '" + std::string(text) + "'"); };

  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const mpz_class d{std::string(den)};
    if (d == 0) throw DomainError("rational with zero denominator");
    result = Rational(mpz_class(std::string(num)), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw bad();
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class digits{std::string(whole.empty() ? "0" : whole) + std::string(frac)};
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw bad();
    result = Rational(mpz_class(std::string(body)));
  }
  return negative ? -result : result;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r = -r;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace polylog
