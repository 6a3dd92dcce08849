#include <doctest.h>

#include <cmath>
#include <functional>

#include "polylog/error.hpp"
#include "polylog/eval.hpp"

using namespace polylog;

namespace {

// Nested loops over n_1 > n_2 > ... > n_k > 0 with n_1 <= limit.
BigReal naive(const LambdaSpec& spec, long limit, const Precision& prec) {
  const auto& t = spec.terms();
  const std::size_t k = t.size();
  BigReal total(prec);
  std::function<void(std::size_t, long, BigReal)> rec = [&](std::size_t j, long upper, BigReal acc) {
    if (j == k) {
      total += acc;
      return;
    }
    for (long n = static_cast<long>(k - j); n <= upper; ++n) {
      BigReal f = acc * pow_int(BigReal(n, prec), -t[j].exponent);
      // b_j^-(n_j - n_{j+1}): charge b_j^-n_j now and b_j^{+n_{j+1}} via the next level.
      f /= pow_int(BigReal(t[j].base, prec), n);
      if (j > 0) f *= pow_int(BigReal(t[j - 1].base, prec), n);
      rec(j + 1, n - 1, f);
    }
  };
  rec(0, limit, BigReal(1, prec));
  return total;
}

const Precision kP(30);

}  // namespace

TEST_CASE("simple closed values") {
  CHECK(within(evaluate_lambda(LambdaSpec({1}, {Rational(2)}), kP), ln(Rational(2), kP), -40));
  CHECK(within(evaluate_lambda(LambdaSpec({1}, {Rational(5)}), kP), -ln(Rational(4, 5), kP), -40));
  CHECK(within(evaluate_lambda(LambdaSpec({0, 0}, {Rational(3), Rational(2)}), kP),
               BigReal(Rational(1, 2), kP), -40));
  CHECK(within(evaluate_lambda(LambdaSpec::delta({-1}), kP), BigReal(2, kP), -40));
  CHECK(within(evaluate_lambda(LambdaSpec::delta({-2}), kP), BigReal(6, kP), -40));
  CHECK(within(evaluate_lambda(LambdaSpec::delta({-3}), kP), BigReal(26, kP), -40));
  CHECK(evaluate_lambda(LambdaSpec(), kP) == BigReal(1, kP));
}

TEST_CASE("direct sums agree with naive nested loops") {
  const std::vector<LambdaSpec> specs = {
      LambdaSpec({2, 1}, {Rational(2), Rational(3)}),
      LambdaSpec({1, 1, 2}, {Rational(-2), Rational(3), Rational(5, 2)}),
      LambdaSpec({3, -1}, {Rational(4), Rational(-3)}),
      LambdaSpec({2, 1}, {Rational(3), Rational(3)}),
  };
  for (const auto& s : specs) {
    CAPTURE(s.to_string());
    CHECK(within(direct_nested_sum(s, kP), naive(s, 160, kP), -35));
  }
}

TEST_CASE("truncation plan bounds the tail") {
  const std::vector<LambdaSpec> specs = {
      LambdaSpec({1, 1, 1}, {Rational(3, 2), Rational(3, 2), Rational(3, 2)}),
      LambdaSpec({2, -2}, {Rational(2), Rational(-5, 3)}),
      LambdaSpec({-3}, {Rational(2)}),
  };
  const Precision wide(60);
  for (const auto& s : specs) {
    CAPTURE(s.to_string());
    const TruncationPlan plan = plan_truncation(s, -20.0);
    CHECK(plan.log10_tail_bound <= -20.0);
    const BigReal head = partial_nested_sum(s, plan.terms, wide);
    const BigReal far = partial_nested_sum(s, plan.terms * 4 + 50, wide);
    CHECK(within(head, far, plan.log10_tail_bound));
    if (plan.terms > 1) {
      CHECK(plan_truncation(s, -20.0).terms == plan.terms);
    }
  }
  CHECK(plan_truncation(LambdaSpec({2}, {Rational(10)}), -30).terms < 40);
}

TEST_CASE("Hölder split structure") {
  const Word w = lambda_to_word(LambdaSpec::zeta({2, 1, 2, 1, 1, 1}));
  const HolderSplit h = holder_split(w, Rational(2));
  CHECK(h.q == Rational(2));
  REQUIRE(h.terms.size() == 9);
  CHECK(h.terms.back().left == LambdaSpec({5, 3}, {Rational(2), Rational(2)}));
  CHECK(h.terms.back().right.empty());
  CHECK(h.terms.front().left.empty());
  CHECK(h.terms.front().right == LambdaSpec({2, 1, 2, 1, 1, 1}, std::vector<Rational>(6, Rational(2))));

  const HolderSplit z3 = holder_split(lambda_to_word(LambdaSpec::zeta({3})), Rational(2));
  REQUIRE(z3.terms.size() == 4);
  for (const auto& t : z3.terms) {
    for (const auto& b : t.left.bases()) CHECK(b == Rational(2));
    for (const auto& b : t.right.bases()) CHECK(b == Rational(2));
  }

  const HolderSplit alt = holder_split(Word{0, 1, -1}, Rational(3));
  CHECK(alt.q == Rational(3, 2));
  REQUIRE(alt.terms.size() == 4);
  CHECK(alt.terms.back().sign == -1);
  CHECK(alt.terms.back().left == LambdaSpec({1, 2}, {Rational(3), Rational(3, 2)}));

  CHECK_THROWS_AS(holder_split(Word{0, 1}, Rational(1)), ArgumentError);
  CHECK_THROWS_AS(holder_split(Word{1, 1}, Rational(2)), DivergenceError);
}

TEST_CASE("Hölder evaluation is independent of p") {
  const std::vector<LambdaSpec> specs = {
      LambdaSpec::zeta({2, 1}), LambdaSpec({2, 1}, {Rational(1), Rational(-1)}),
      LambdaSpec::zeta({3, 1, 2}), LambdaSpec({1, 2}, {Rational(-1), Rational(2)})};
  for (const auto& s : specs) {
    CAPTURE(s.to_string());
    const BigReal v2 = evaluate_lambda_holder(s, Rational(2), Precision(40));
    CHECK(within(v2, evaluate_lambda_holder(s, Rational(5, 3), Precision(40)), -45));
    CHECK(within(v2, evaluate_lambda_holder(s, Rational(5, 2), Precision(40)), -45));
    CHECK(within(v2, evaluate_lambda(s, Precision(40)), -45));
  }
  CHECK_THROWS_AS(evaluate_lambda_holder(LambdaSpec({1, 2}, {Rational(-1), Rational(5, 4)}), Rational(2), kP), UnsupportedError);
}

TEST_CASE("known zeta and Euler sum values") {
  const BigReal p2 = pi(kP) * pi(kP);
  CHECK(within(evaluate_z(MzvString{2}, kP), p2 / 6, -40));
  CHECK(within(evaluate_z(MzvString{4}, kP), p2 * p2 / 90, -40));
  CHECK(within(evaluate_z(MzvString{2, 1}, kP), evaluate_z(MzvString{3}, kP), -40));
  CHECK(within(evaluate_z(MzvString{-1}, kP), -ln(Rational(2), kP), -40));
  CHECK(within(evaluate_z(MzvString{-2}, kP), -p2 / 12, -40));
  const BigReal l2 = ln(Rational(2), kP);
  CHECK(within(evaluate_z(MzvString{-1, -1}, kP), (l2 * l2 - p2 / 6) / 2, -40));
  CHECK(within(evaluate_word(Word{0, 1}, kP), -p2 / 6, -40));
}

TEST_CASE("zp and J") {
  const BigReal l2 = ln(Rational(2), kP);
  CHECK(within(evaluate_zp(Rational(1), {2}, kP), pi(kP) * pi(kP) / 6, -40));
  CHECK(within(evaluate_zp(Rational(2), {1}, kP), l2, -40));
  CHECK(within(evaluate_zp(Rational(2), {1, 1}, kP), l2 * l2 / 2, -40));
  CHECK_THROWS_AS(evaluate_zp(Rational(1, 2), {2}, kP), ArgumentError);
  CHECK_THROWS_AS(evaluate_zp(Rational(2), {0}, kP), ArgumentError);
  CHECK_THROWS_AS(evaluate_zp(Rational(1), {1, 2}, kP), DivergenceError);

  CHECK(evaluate_J(Rational(0), kP).is_zero());
  CHECK(within(evaluate_J(Rational(1), kP), evaluate_z(MzvString{3}, kP), -40));
  const LambdaSpec third({2, 1}, {Rational(3), Rational(3)});
  CHECK(within(evaluate_J(Rational(1, 3), kP), naive(third, 160, kP), -35));
  CHECK_THROWS_AS(evaluate_J(Rational(3, 2), kP), DomainError);
}

TEST_CASE("hypergeometric series") {
  const BigReal one(1, kP);
  const BigReal two(2, kP);
  CHECK(within(hyp2f1_series(BigReal(kP), two, one, Rational(1, 2), kP), one, -40));
  CHECK(within(hyp2f1_series(one, one, two, Rational(1, 2), kP), ln(Rational(2), kP) * 2, -40));
  // (1 - z)^-a for b = c.
  CHECK(within(hyp2f1_series(BigReal(3, kP), two, two, Rational(-1, 2), kP),
               BigReal(Rational(8, 27), kP), -40));
  CHECK_THROWS_AS(hyp2f1_series(one, one, BigReal(-2, kP), Rational(1, 4), kP), DomainError);
  CHECK_THROWS_AS(hyp2f1_series(one, one, two, Rational(3, 4), kP), DomainError);
}

TEST_CASE("evaluation rejects what it cannot sum") {
  CHECK_THROWS_AS(evaluate_lambda(LambdaSpec::zeta({1}), kP), DivergenceError);
  CHECK_THROWS_AS(evaluate_lambda(LambdaSpec({0}, {Rational(-1)}), kP), UnsupportedError);
  CHECK_THROWS_AS(evaluate_lambda(LambdaSpec({2}, {Rational(1, 2)}), kP), DivergenceError);
  CHECK_THROWS_AS(direct_nested_sum(LambdaSpec::zeta({2}), kP), UnsupportedError);
}

TEST_CASE("formal sums evaluate term by term") {
  LambdaSum s = as_sum(LambdaSpec({1}, {Rational(2)}), Rational(2));
  s -= as_sum(LambdaSpec({1, 1}, {Rational(2), Rational(2)}));
  const BigReal l2 = ln(Rational(2), kP);
  CHECK(within(evaluate(s, kP), l2 * 2 - l2 * l2 / 2, -40));
  const LambdaSum sq = multiply(as_sum(LambdaSpec::zeta({2})), as_sum(LambdaSpec::zeta({2})));
  const BigReal z2 = pi(kP) * pi(kP) / 6;
  CHECK(within(evaluate(sq, kP), z2 * z2, -40));
  WordSum ws;
  ws.add(Word{0, 1}, Rational(3));
  CHECK(within(evaluate(ws, kP), -z2 * 3, -40));
}
