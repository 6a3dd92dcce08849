#include <doctest.h>

#include "polylog/closed_forms.hpp"
#include "polylog/error.hpp"
#include "polylog/eval.hpp"

using namespace polylog;

namespace {

const Precision kP(40);

BigReal ev(const LambdaSpec& s) { return evaluate_lambda(s, kP); }

LambdaSpec mu_of(std::vector<Rational> b) { return LambdaSpec::mu(b); }

std::vector<Rational> signs(int minus_before, int minus_after) {
  std::vector<Rational> b(static_cast<std::size_t>(minus_before), Rational(-1));
  b.emplace_back(1);
  b.insert(b.end(), static_cast<std::size_t>(minus_after), Rational(-1));
  return b;
}

}  // namespace

TEST_CASE("constants") {
  ClosedFormConstants c(kP);
  const BigReal l2 = ln(Rational(2), kP);
  CHECK(within(c.A(1), l2, -45));
  CHECK(within(c.A(2), ev(LambdaSpec::delta({2})), -45));
  CHECK(within(c.P(3), l2 * l2 * l2 / 6, -45));
  CHECK(within(c.Z(2), pi(kP) * pi(kP) / 6, -45));
  CHECK(within(c.Z(3), -ev(LambdaSpec::zeta({3})), -45));
  CHECK(within(c.zeta(4), ev(LambdaSpec::zeta({4})), -45));
  CHECK_THROWS_AS(c.Z(1), DivergenceError);
}

TEST_CASE("zagier and related MZV evaluations") {
  const BigReal p4 = pow_int(pi(kP), 4);
  CHECK(within(zagier(1, kP), p4 / 360, -45));
  CHECK(within(zagier(1, kP), ev(LambdaSpec::zeta({3, 1})), -45));
  CHECK(within(zagier(2, kP), ev(LambdaSpec::zeta({3, 1, 3, 1})), -45));
  CHECK(within(zagier(0, kP), BigReal(1, kP), -45));
  CHECK(within(z213(0, kP), ev(LambdaSpec::zeta({2})), -45));
  CHECK(within(z213(1, kP), ev(LambdaSpec::zeta({2, 1, 3})), -45));
}

TEST_CASE("unit Euler sums") {
  CHECK(mu_power(Rational(3), 0, kP) == BigReal(1, kP));
  const BigReal l2 = ln(Rational(2), kP);
  CHECK(within(mu_power(Rational(2), 4, kP), pow_int(l2, 4) / 24, -45));
  CHECK(within(mu_power(Rational(2), 4, kP), ev(LambdaSpec::delta({1, 1, 1, 1})), -45));
  CHECK(within(mu_power(Rational(5, 2), 3, kP), ev(mu_of({Rational(5, 2), Rational(5, 2), Rational(5, 2)})),
               -45));
  CHECK(within(t4(1, kP), l2 * l2 / 2 - pi(kP) * pi(kP) / 12, -45));
  for (int m = 1; m <= 3; ++m) {
    CHECK(within(t4(m, kP), ev(mu_of(signs(m, 0))), -45));
    for (int n = 0; n <= 2; ++n) CHECK(within(t5(m, n, kP), ev(mu_of(signs(m, n))), -45));
  }
}

TEST_CASE("delta values") {
  const std::vector<long> lock = {1, 2, 6, 26, 150, 1082, 9366};
  for (int n = 0; n < static_cast<int>(lock.size()); ++n) CHECK(delta_neg(n) == lock[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= 5; ++n) {
    CHECK(within(ev(LambdaSpec::delta({-n})), BigReal(delta_neg(n), kP), -40));
    const Rational d = delta_one_neg(n);
    CHECK(within(ev(LambdaSpec::delta({1, -n})), BigReal(d, kP), -40));
  }
  CHECK_THROWS_AS(delta_one_neg(0), ArgumentError);
  CHECK(zero_string({Rational(3), Rational(2)}) == Rational(1, 2));
  CHECK(zero_string({}) == Rational(1));
  const std::vector<Rational> zs = {Rational(-2), Rational(5, 2), Rational(4)};
  CHECK(within(ev(LambdaSpec({0, 0, 0}, zs)), BigReal(zero_string(zs), kP), -40));
  CHECK_THROWS_AS(zero_string({Rational(1)}), DomainError);

  CHECK(within(li2_half(kP), ev(LambdaSpec::delta({2})), -45));
  for (int n = 0; n <= 3; ++n) {
    std::vector<int> s{2};
    s.insert(s.end(), static_cast<std::size_t>(n), 1);
    CHECK(within(zeta_li_log(n, kP), ev(LambdaSpec::delta(s)), -45));
  }
  for (int n = 1; n <= 3; ++n) CHECK(within(delta_odd(n, kP), ev(LambdaSpec::delta({1, 2 * n - 1})), -45));
  CHECK(within(delta_12(kP), ev(LambdaSpec::delta({1, 2})), -45));
}

TEST_CASE("catalog dispatch") {
  CHECK(within(closed_form("zagier", {Rational(1)}, kP), zagier(1, kP), -50));
  CHECK(within(closed_form("mu_power", {Rational(2), Rational(3)}, kP), mu_power(Rational(2), 3, kP), -50));
  CHECK(within(closed_form("zero_string", {Rational(3), Rational(2)}, kP), BigReal(Rational(1, 2), kP), -50));
  CHECK(within(closed_form("t5", {Rational(2), Rational(1)}, kP), t5(2, 1, kP), -50));
  CHECK(within(closed_form("delta_neg", {Rational(3)}, kP), BigReal(26, kP), -50));
  CHECK(within(closed_form("li2_half", {}, kP), li2_half(kP), -50));
  CHECK_THROWS_AS(closed_form("nope", {}, kP), ArgumentError);
  CHECK_THROWS_AS(closed_form("zagier", {}, kP), ArgumentError);
  CHECK_THROWS_AS(closed_form("zagier", {Rational(1, 2)}, kP), ArgumentError);
  CHECK_THROWS_AS(closed_form("t4", {Rational(0)}, kP), ArgumentError);
  CHECK_THROWS_AS(closed_form("mu_power", {Rational(1), Rational(2)}, kP), ArgumentError);
}
