#include "polylog/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "polylog/error.hpp"
#include "polylog/eval.hpp"

namespace polylog {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(message, at);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' but the input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  static ExprPtr node(ExprKind kind, std::size_t at, std::vector<ExprPtr> children = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->position = at;
    e->children = std::move(children);
    return e;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return left;
      const std::size_t at = pos_++;
      left = node(c == '+' ? ExprKind::Add : ExprKind::Sub, at, {left, term()});
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (true) {
      const char c = peek();
      if (c != '*' && c != '/') return left;
      const std::size_t at = pos_++;
      left = node(c == '*' ? ExprKind::Mul : ExprKind::Div, at, {left, factor()});
    }
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->position = at;
    e->children = {base};
    e->exponent = integer("exponent");
    return e;
  }

  int integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    skip_space();
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) fail_at(start, std::string("expected an integer ") + what);
    std::string text;
    for (std::size_t i = start; i < pos_; ++i) {
      if (!std::isspace(static_cast<unsigned char>(src_[i]))) text += src_[i];
    }
    if (text.size() > 9) fail_at(start, std::string(what) + " is too large");
    return std::stoi(text);
  }

  std::string number_text(bool allow_fraction) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    } else if (allow_fraction && pos_ < src_.size() && src_[pos_] == '/') {
      const std::size_t slash = pos_++;
      const std::size_t den = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == den) pos_ = slash;
    }
    const std::string text(src_.substr(start, pos_ - start));
    if (text.empty() || text == ".") fail_at(start, "expected a number");
    return text;
  }

  ExprPtr number(bool allow_fraction) {
    const std::size_t at = (skip_space(), pos_);
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Number;
    e->position = at;
    e->literal = number_text(allow_fraction);
    try {
      e->number = Rational::parse(e->literal);
    } catch (const Error& err) {
      fail_at(at, err.what());
    }
    return e;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  ExprPtr atom() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '\0') fail("unexpected end of input");
    if (c == '-') {
      ++pos_;
      return node(ExprKind::Neg, at, {factor()});
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(false);
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");

    const std::string name = identifier();
    if (name == "Pi") return node(ExprKind::Pi, at);
    if (name == "log") {
      expect('(');
      ExprPtr arg = expr();
      expect(')');
      return node(ExprKind::Log, at, {arg});
    }
    if (name == "z") {
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::Z;
      e->position = at;
      expect('(');
      if (accept(')')) fail_at(at, "z() needs at least one argument");
      do {
        const std::size_t arg_at = (skip_space(), pos_);
        const int v = integer("argument");
        if (v == 0) fail_at(arg_at, "z arguments must be nonzero");
        e->ints.push_back(v);
      } while (accept(','));
      expect(')');
      return e;
    }
    if (name == "zp") {
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::Zp;
      e->position = at;
      expect('(');
      if (peek() == ')') fail_at(at, "zp() needs p and at least one argument");
      ExprPtr p = number(true);
      if (p->number < Rational(1)) fail_at(p->position, "zp needs p >= 1");
      e->number = p->number;
      e->literal = p->literal;
      if (!accept(',')) fail_at(at, "zp needs at least one integer argument after p");
      do {
        const std::size_t arg_at = (skip_space(), pos_);
        const int v = integer("argument");
        if (v < 1) fail_at(arg_at, "zp arguments must be positive");
        e->ints.push_back(v);
      } while (accept(','));
      expect(')');
      return e;
    }
    if (name == "lindep") {
      expect('(');
      expect('[');
      std::vector<ExprPtr> items;
      do {
        items.push_back(expr());
      } while (accept(','));
      expect(']');
      expect(')');
      if (items.size() < 2) fail_at(at, "lindep needs at least two values");
      return node(ExprKind::Lindep, at, std::move(items));
    }
    fail_at(at, "unknown name '" + name + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string wrap(const Expr& e, bool parens) {
  const std::string s = to_string(e);
  return parens ? "(" + s + ")" : s;
}

// Value with an estimate of its absolute error, kept as log10.
struct Approx {
  BigReal value;
  double log10_err;
};

constexpr double kExact = -std::numeric_limits<double>::infinity();

double log10_abs(const BigReal& x) {
  if (x.is_zero()) return kExact;
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, x.get(), MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

double log10_sum(double a, double b) {
  if (a == kExact) return b;
  if (b == kExact) return a;
  const double hi = std::max(a, b);
  return hi + std::log10(1.0 + std::pow(10.0, std::min(a, b) - hi));
}

// Error of a freshly rounded result plus the propagated error.
Approx rounded(BigReal v, double propagated, const Precision& prec) {
  const double rounding = log10_abs(v) - (prec.working_digits() - 1);
  return {std::move(v), log10_sum(propagated, rounding)};
}

Approx eval_approx(const Expr& e, const Precision& prec) {
  const auto child = [&](std::size_t i) { return eval_approx(*e.children[i], prec); };
  switch (e.kind) {
    case ExprKind::Number:
      return rounded(BigReal(e.number, prec), kExact, prec);
    case ExprKind::Pi:
      return rounded(pi(prec), kExact, prec);
    case ExprKind::Log: {
      Approx x = child(0);
      const double err = x.log10_err - log10_abs(x.value);
      return rounded(ln(x.value), err, prec);
    }
    case ExprKind::Neg: {
      Approx x = child(0);
      return {-x.value, x.log10_err};
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      Approx a = child(0);
      Approx b = child(1);
      BigReal v = e.kind == ExprKind::Add ? a.value + b.value : a.value - b.value;
      return rounded(std::move(v), log10_sum(a.log10_err, b.log10_err), prec);
    }
    case ExprKind::Mul: {
      Approx a = child(0);
      Approx b = child(1);
      const double err = log10_sum(log10_abs(a.value) + b.log10_err, log10_abs(b.value) + a.log10_err);
      return rounded(a.value * b.value, err, prec);
    }
    case ExprKind::Div: {
      Approx b = child(1);
      if (b.value.is_zero() || log10_abs(b.value) < -(prec.digits() - 5.0) ||
          !(b.log10_err < log10_abs(b.value))) {
        throw DomainError("division by a value smaller than 1e-" + std::to_string(prec.digits() - 5) +
                          " (column " + std::to_string(e.position + 1) + ")");
      }
      Approx a = child(0);
      BigReal q = a.value / b.value;
      const double err = log10_sum(a.log10_err, log10_abs(q) + b.log10_err) - log10_abs(b.value);
      return rounded(std::move(q), err, prec);
    }
    case ExprKind::Pow: {
      Approx x = child(0);
      BigReal v = pow_int(x.value, e.exponent);
      const double n = std::fabs(static_cast<double>(e.exponent));
      const double err = e.exponent == 0 ? kExact : log10_abs(v) + std::log10(n) + x.log10_err - log10_abs(x.value);
      return rounded(std::move(v), err, prec);
    }
    case ExprKind::Z:
    case ExprKind::Zp: {
      BigReal v = e.kind == ExprKind::Z ? evaluate_z(MzvString(e.ints), prec) : evaluate_zp(e.number, e.ints, prec);
      return rounded(std::move(v), prec.log10_tolerance(), prec);
    }
    case ExprKind::Lindep:
      throw ArgumentError("lindep is only allowed at the top level (column " +
                          std::to_string(e.position + 1) + ")");
  }
  throw Error("unknown expression node");
}

// A value indistinguishable from zero at the accuracy reached is zero.
BigReal eval_real(const Expr& e, const Precision& prec) {
  Approx a = eval_approx(e, prec);
  if (!a.value.is_zero() && !(a.log10_err < log10_abs(a.value))) return BigReal(prec);
  return std::move(a.value);
}

}  // namespace

ExprPtr parse_expression(std::string_view source) { return Parser(source).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return e.literal.empty() ? e.number.to_string() : e.literal;
    case ExprKind::Pi:
      return "Pi";
    case ExprKind::Log:
      return "log(" + to_string(*e.children[0]) + ")";
    case ExprKind::Neg: {
      const Expr& c = *e.children[0];
      return "-" + wrap(c, precedence(c.kind) < precedence(ExprKind::Pow));
    }
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      const char* op = e.kind == ExprKind::Add ? " + " : e.kind == ExprKind::Sub ? " - "
                                                    : e.kind == ExprKind::Mul ? "*" : "/";
      const Expr& l = *e.children[0];
      const Expr& r = *e.children[1];
      const int p = precedence(e.kind);
      return wrap(l, precedence(l.kind) < p) + op + wrap(r, precedence(r.kind) <= p);
    }
    case ExprKind::Pow: {
      const Expr& b = *e.children[0];
      return wrap(b, precedence(b.kind) <= precedence(ExprKind::Pow)) + "^" + std::to_string(e.exponent);
    }
    case ExprKind::Z:
      return "z(" + join_ints(e.ints) + ")";
    case ExprKind::Zp:
      return "zp(" + (e.literal.empty() ? e.number.to_string() : e.literal) + "," + join_ints(e.ints) + ")";
    case ExprKind::Lindep: {
      std::string out = "lindep([";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(*e.children[i]);
      }
      return out + "])";
    }
  }
  return "?";
}

int max_weight(const Expr& e) {
  int w = 0;
  if (e.kind == ExprKind::Z) {
    for (int v : e.ints) w += v < 0 ? -v : v;
  } else if (e.kind == ExprKind::Zp) {
    for (int v : e.ints) w += v;
  }
  for (const auto& c : e.children) w = std::max(w, max_weight(*c));
  return w;
}

ExprValue eval_expression(const Expr& e, const Precision& prec) {
  if (e.kind != ExprKind::Lindep) return eval_real(e, prec);
  std::vector<BigReal> values;
  for (const auto& c : e.children) {
    if (c->kind == ExprKind::Lindep) {
      throw ArgumentError("nested lindep is not allowed (column " + std::to_string(c->position + 1) + ")");
    }
    values.push_back(eval_real(*c, prec));
  }
  return lindep(values);
}

ExprValue eval_expression(const Expr& e, int digits) {
  return eval_expression(e, Precision::for_weight(digits, max_weight(e)));
}

std::string format_value(const ExprValue& v, int digits, bool ezface) {
  if (const auto* x = std::get_if<BigReal>(&v)) return to_decimal_string(*x, digits);
  const auto& r = std::get<RelationResult>(v);
  if (!r.found()) {
    std::ostringstream out;
    out.precision(3);
    out << "no relation found; any relation has norm > " << r.exclusion_bound.value_or(0.0);
    return out.str();
  }
  std::string out;
  for (std::size_t i = 0; i < r.coefficients->size(); ++i) {
    if (i > 0) out += ", ";
    out += (*r.coefficients)[i].get_str();
    if (ezface) out += ".";
  }
  return out;
}

}  // namespace polylog
