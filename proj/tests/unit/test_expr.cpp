#include <doctest.h>

#include <random>

#include "polylog/error.hpp"
#include "polylog/eval.hpp"
#include "polylog/expr.hpp"

using namespace polylog;

namespace {

BigReal value_of(const std::string& text, int digits) {
  return std::get<BigReal>(eval_expression(*parse_expression(text), digits));
}

std::string random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 11);
  std::uniform_int_distribution<int> small(1, 9);
  switch (pick(rng)) {
    case 0: return std::to_string(small(rng));
    case 1: return std::to_string(small(rng)) + "/" + std::to_string(small(rng) + 1);
    case 2: return "Pi";
    case 3: return "z(" + std::to_string(small(rng) % 3 + 2) + ",-1)";
    case 4: return "zp(2," + std::to_string(small(rng) % 3 + 1) + ")";
    case 5: return "log(" + random_expr(rng, depth - 1) + ")";
    case 6: return random_expr(rng, depth - 1) + "+" + random_expr(rng, depth - 1);
    case 7: return random_expr(rng, depth - 1) + "-" + random_expr(rng, depth - 1);
    case 8: return random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1);
    case 9: return random_expr(rng, depth - 1) + "/(" + random_expr(rng, depth - 1) + ")";
    case 10: return "(" + random_expr(rng, depth - 1) + ")^" + std::to_string(small(rng) % 4);
    default: return "-" + random_expr(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("parsing reference expressions") {
  const ExprPtr z6 = parse_expression("Pi^6/z(6)");
  CHECK(z6->kind == ExprKind::Div);
  CHECK(z6->children[0]->kind == ExprKind::Pow);
  CHECK(z6->children[0]->exponent == 6);
  CHECK(z6->children[1]->ints == std::vector<int>{6});

  const ExprPtr rel = parse_expression("lindep([12*z(3), Pi^2*log(2), zp(2,2,1), zp(2,3)])");
  CHECK(rel->kind == ExprKind::Lindep);
  CHECK(rel->children.size() == 4);
  const ExprPtr five = parse_expression("lindep([z(5), z(2)*z(3), zp(2,5), Pi^4*log(2), 1])");
  CHECK(five->children.size() == 5);

  const ExprPtr zp = parse_expression("zp(3/2, 2, 1)");
  CHECK(zp->number == Rational(3, 2));
  CHECK(zp->ints == std::vector<int>{2, 1});
  CHECK(max_weight(*zp) == 3);
  CHECK(max_weight(*parse_expression("z(2)*z(-3,1,1)+1")) == 5);

  const ExprPtr neg = parse_expression("-Pi^2");
  CHECK(neg->kind == ExprKind::Neg);
  CHECK(neg->children[0]->kind == ExprKind::Pow);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expression("1 + z()");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("z() needs at least one argument") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_expression("z(0)"), ParseError);
  CHECK_THROWS_AS(parse_expression("zp(1/2,2)"), ParseError);
  CHECK_THROWS_AS(parse_expression("foo(2)"), ParseError);
  CHECK_THROWS_AS(parse_expression("(1+2"), ParseError);
  CHECK_THROWS_AS(parse_expression("2^x"), ParseError);
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("1 2"), ParseError);
}

TEST_CASE("printing round-trips") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const std::string src = random_expr(rng, 4);
    CAPTURE(src);
    const ExprPtr e = parse_expression(src);
    const std::string text = to_string(*e);
    const ExprPtr again = parse_expression(text);
    CHECK(to_string(*again) == text);
  }
  CHECK(to_string(*parse_expression("(1-2)-3")) == to_string(*parse_expression("1-2-3")));
  CHECK(to_string(*parse_expression("1-(2-3)")) != to_string(*parse_expression("1-2-3")));
}

TEST_CASE("evaluation") {
  CHECK(to_decimal_string(value_of("Pi^6/z(6)", 30), 10) == "945.0000000");
  CHECK(to_decimal_string(value_of("-Pi^2", 20), 6) == "-9.86960");
  CHECK(to_decimal_string(value_of("2^-1", 20), 3) == "0.500");
  CHECK(to_decimal_string(value_of("(1/3)*3", 20), 5) == "1.0000");
  CHECK(value_of("log(2) - zp(2,1)", 30).is_zero());
  CHECK(value_of("z(2,1) - z(3)", 30).is_zero());
  const BigReal a = value_of("z(3) + z(-2,1)", 40);
  const Precision p = a.precision();
  CHECK(within(a, evaluate_z(MzvString{3}, p) + evaluate_z(MzvString{-2, 1}, p), -45));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval_expression(*parse_expression("1/(z(2,1)-z(3))"), 30), DomainError);
  CHECK_THROWS_AS(eval_expression(*parse_expression("1/0"), 30), DomainError);
  CHECK_THROWS_AS(eval_expression(*parse_expression("log(0)"), 30), DomainError);
  CHECK_THROWS_AS(eval_expression(*parse_expression("z(1,2)"), 30), DivergenceError);
  CHECK_THROWS_AS(eval_expression(*parse_expression("lindep([1, lindep([1,2])])"), 30), Error);
  CHECK_THROWS_AS(eval_expression(*parse_expression("1 + lindep([1,2])"), 30), Error);
}

TEST_CASE("relations through expressions") {
  const ExprPtr e = parse_expression("lindep([12*z(3), Pi^2*log(2), zp(2,2,1), zp(2,3)])");
  const ExprValue v = eval_expression(*e, 50);
  REQUIRE(std::holds_alternative<RelationResult>(v));
  CHECK(format_value(v, 50) == "1, -1, -12, -12");
  CHECK(format_value(v, 50, true) == "1., -1., -12., -12.");
  const ExprValue none = eval_expression(*parse_expression("lindep([Pi, 1, log(2)])"), 40);
  CHECK(format_value(none, 40).rfind("no relation found; any relation has norm > ", 0) == 0);
}

TEST_CASE("evaluation is deterministic and precision-monotone") {
  const ExprPtr e = parse_expression("z(3,1) + zp(3/2,2) - log(3)*Pi");
  CHECK(format_value(eval_expression(*e, 30), 30) == format_value(eval_expression(*e, 30), 30));
  const std::string lo = format_value(eval_expression(*e, 20), 20);
  const std::string hi = format_value(eval_expression(*e, 40), 40);
  CHECK(hi.substr(0, lo.size() - 2) == lo.substr(0, lo.size() - 2));
  const Precision fixed(25);
  CHECK(std::get<BigReal>(eval_expression(*e, fixed)).precision() == fixed);
}
