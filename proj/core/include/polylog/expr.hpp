#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polylog/precision.hpp"
#include "polylog/rational.hpp"
#include "polylog/relations.hpp"

namespace polylog {

enum class ExprKind { Number, Pi, Log, Neg, Add, Sub, Mul, Div, Pow, Z, Zp, Lindep };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::Number;
  /// Number literal value, or p for zp.
  Rational number;
  /// Literal text as written, kept for printing.
  std::string literal;
  /// Integer arguments of z and zp.
  std::vector<int> ints;
  int exponent = 0;
  std::vector<ExprPtr> children;
  /// Offset of the node in the source text.
  std::size_t position = 0;
};

/// expr   := term (('+' | '-') term)*
/// term   := factor (('*' | '/') factor)*
/// factor := atom ('^' integer)?
/// atom   := number | 'Pi' | 'log' '(' expr ')' | 'z' '(' ints ')'
///         | 'zp' '(' number (',' int)+ ')' | 'lindep' '(' '[' expr (',' expr)* ']' ')'
///         | '(' expr ')' | '-' factor
/// Numbers are decimals or p/q literals, read exactly. ParseError carries
/// the offending offset.
ExprPtr parse_expression(std::string_view source);

/// Canonical text; parsing it yields the same tree.
std::string to_string(const Expr& e);

/// Largest weight of any z or zp call in the tree.
int max_weight(const Expr& e);

using ExprValue = std::variant<BigReal, RelationResult>;

/// lindep is only allowed at the top level. Division by a value below
/// 10^(-digits+5) in magnitude is a DomainError.
ExprValue eval_expression(const Expr& e, const Precision& prec);

/// Evaluates at digits decimal places with a guard sized for the
/// expression's weight.
ExprValue eval_expression(const Expr& e, int digits);

/// Values print with `digits` significant digits. Relations print as
/// "12, -1, -12, -12", or "12., -1., -12., -12." in EZ-Face style.
std::string format_value(const ExprValue& v, int digits, bool ezface = false);

}  // namespace polylog
