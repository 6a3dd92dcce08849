#include "polylog/formal_sum.hpp"

#include <algorithm>

#include "polylog/error.hpp"

namespace polylog {

LambdaProduct::LambdaProduct(LambdaSpec factor) {
  if (!factor.empty()) factors_.push_back(std::move(factor));
}

LambdaProduct::LambdaProduct(std::vector<LambdaSpec> factors) {
  for (auto& f : factors) {
    if (!f.empty()) factors_.push_back(std::move(f));
  }
  std::sort(factors_.begin(), factors_.end());
}

int LambdaProduct::weight() const {
  int w = 0;
  for (const auto& f : factors_) w += f.weight();
  return w;
}

std::size_t LambdaProduct::max_depth() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d = std::max(d, f.depth());
  return d;
}

std::string LambdaProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += "*";
    out += factors_[i].to_string();
  }
  return out;
}

LambdaProduct operator*(const LambdaProduct& a, const LambdaProduct& b) {
  std::vector<LambdaSpec> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return LambdaProduct(std::move(all));
}

std::strong_ordering operator<=>(const LambdaProduct& a, const LambdaProduct& b) {
  if (a.factors_.size() != b.factors_.size()) return a.factors_.size() <=> b.factors_.size();
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    const auto c = a.factors_[i] <=> b.factors_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

LambdaSum as_sum(const LambdaSpec& spec, const Rational& coefficient) {
  return LambdaSum(LambdaProduct(spec), coefficient);
}

LambdaSum multiply(const LambdaSum& a, const LambdaSum& b) {
  LambdaSum out;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) out.add(pa * pb, ca * cb);
  }
  return out;
}

namespace {

void parse_term(std::string_view text, bool negative, LambdaSum& out) {
  Rational coefficient(1);
  std::vector<LambdaSpec> factors;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']') --depth;
      if (!(text[i] == '*' && depth == 0)) continue;
    }
    const std::string_view piece = text.substr(start, i - start);
    if (piece.empty()) throw ArgumentError("empty factor in formal sum");
    if (piece.front() == 'L') {
      factors.push_back(LambdaSpec::parse(piece));
    } else {
      coefficient *= Rational::parse(piece);
    }
    start = i + 1;
  }
  out.add(LambdaProduct(std::move(factors)), negative ? -coefficient : coefficient);
}

}  // namespace

LambdaSum parse_lambda_sum(std::string_view text) {
  LambdaSum out;
  if (text == "0") return out;
  bool negative = false;
  std::size_t start = 0;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    start = 1;
  }
  int depth = 0;
  for (std::size_t i = start; i <= text.size(); ++i) {
    const bool end = i == text.size();
    if (!end) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']') --depth;
    }
    const bool separator = !end && depth == 0 && i + 2 < text.size() && text[i] == ' ' &&
                           (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ';
    if (!end && !separator) continue;
    parse_term(text.substr(start, i - start), negative, out);
    if (end) break;
    negative = text[i + 1] == '-';
    start = i + 3;
    i += 2;
  }
  return out;
}

}  // namespace polylog
