#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "polylog/error.hpp"
#include "polylog/precision.hpp"
#include "polylog/rational.hpp"

using namespace polylog;

namespace {

// Fixed-point arctan(1/x) * 10^d by the alternating Taylor series.
mpz_class arctan_inverse(long x, long d) {
  mpz_class one;
  mpz_ui_pow_ui(one.get_mpz_t(), 10, static_cast<unsigned long>(d));
  mpz_class power = one / x;
  mpz_class sum = power;
  const long x2 = x * x;
  for (long k = 1; power != 0; ++k) {
    power /= x2;
    const mpz_class term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239), as a decimal string.
std::string machin_pi(long d) {
  const mpz_class v = 16 * arctan_inverse(5, d + 10) - 4 * arctan_inverse(239, d + 10);
  return v.get_str();
}

// ln 2 = sum 1/(k 2^k) in fixed point.
std::string series_ln2(long d) {
  mpz_class one;
  mpz_ui_pow_ui(one.get_mpz_t(), 10, static_cast<unsigned long>(d + 10));
  mpz_class sum = 0;
  mpz_class power = one;
  for (long k = 1; power != 0; ++k) {
    power /= 2;
    sum += power / k;
  }
  return sum.get_str();
}

std::string leading(const BigReal& x, int n) {
  std::string s = to_decimal_string(x, n);
  s.erase(std::remove(s.begin(), s.end(), '.'), s.end());
  return s;
}

}  // namespace

TEST_CASE("Precision validates its range") {
  CHECK_NOTHROW(Precision(10));
  CHECK_NOTHROW(Precision(1000));
  CHECK_THROWS_AS(Precision(9), ArgumentError);
  CHECK_THROWS_AS(Precision(1001), ArgumentError);
  CHECK_THROWS_AS(Precision(50, 19), ArgumentError);
  const Precision p = Precision::for_weight(50, 8);
  CHECK(p.guard() == 100);
  CHECK(p.working_digits() == 150);
  CHECK(p.log10_tolerance() == doctest::Approx(-100.0));
}

TEST_CASE("pi agrees with Machin's formula") {
  for (int d : {15, 50, 200}) {
    const Precision p(d);
    const std::string oracle = machin_pi(d + 5);
    CHECK(leading(pi(p), d).substr(0, static_cast<std::size_t>(d - 2)) ==
          oracle.substr(0, static_cast<std::size_t>(d - 2)));
  }
  CHECK(to_decimal_string(pi(Precision(15)), 15) == "3.14159265358979");
  CHECK(to_decimal_string(pi(Precision(10)), 10) == to_decimal_string(pi(Precision(50)), 10));
}

TEST_CASE("ln agrees with the 1/(k 2^k) series") {
  const Precision p(60);
  const std::string oracle = series_ln2(65);
  CHECK(leading(ln(Rational(2), p), 60).substr(1, 57) == oracle.substr(0, 57));
  CHECK(ln(Rational(1), p).is_zero());
  const BigReal l = ln(Rational(3, 2), p);
  CHECK(within(l * 2, ln(Rational(9, 4), p), -65));
  CHECK_THROWS_AS(ln(Rational(0), p), DomainError);
  CHECK_THROWS_AS(ln(BigReal(-1, p)), DomainError);
}

TEST_CASE("pow_int uses exact binary powering") {
  const Precision p(30);
  const BigReal x(Rational(3, 2), p);
  CHECK(pow_int(x, 0) == BigReal(1, p));
  CHECK(pow_int(x, 5) == BigReal(Rational(243, 32), p));
  CHECK(within(pow_int(x, -3), BigReal(Rational(8, 27), p), -45));
  CHECK_THROWS_AS(pow_int(BigReal(p), -1), DomainError);
  CHECK(pow_int(BigReal(p), 0) == BigReal(1, p));
}

TEST_CASE("BigReal arithmetic and precision discipline") {
  const Precision a(30);
  const Precision b(40);
  BigReal x(Rational(1, 3), a);
  BigReal y(2, a);
  CHECK(within(x * 3, BigReal(1, a), -45));
  CHECK(x < y);
  CHECK((y - x).sign() > 0);
  CHECK((-y).abs() == y);
  CHECK_THROWS_AS(x + BigReal(1, b), PrecisionError);
  CHECK(BigReal::parse("1.5e-3", a) == BigReal(Rational(3, 2000), a));
  CHECK(BigReal(1000, a).log10_magnitude() == 4);
}

TEST_CASE("decimal rendering rounds to nearest") {
  const Precision p(20);
  CHECK(to_decimal_string(BigReal(Rational(2, 3), p), 5) == "0.66667");
  CHECK(to_decimal_string(BigReal(945, p), 6) == "945.000");
  CHECK(to_decimal_string(BigReal(945, p), 3) == "945");
  CHECK(to_decimal_string(BigReal(Rational(-1, 8), p), 3) == "-0.125");
  CHECK(to_decimal_string(BigReal(p), 4) == "0.000");
  CHECK(to_decimal_string(BigReal(Rational(1, 1000000), p), 3) == "1.00e-6");
  CHECK(to_decimal_string(BigReal(Rational(12345678901L), p), 3) == "1.23e+10");
  CHECK_THROWS_AS(to_decimal_string(BigReal(1, p), 21), ArgumentError);
  std::ostringstream os;
  os << BigReal(Rational(1, 4), p);
  CHECK(os.str().rfind("0.25", 0) == 0);
}

TEST_CASE("Rational is exact and canonical") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("22/7").to_string() == "22/7");
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("3").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), ArgumentError);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
}
