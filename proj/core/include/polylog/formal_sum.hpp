#pragma once

#include <map>
#include <string>
#include <vector>

#include "polylog/model.hpp"
#include "polylog/rational.hpp"

namespace polylog {

/// Commutative product of multiple polylogarithms. Factors are kept sorted
/// and empty (unit) factors are dropped, so equal products compare equal.
/// The empty product is 1.
class LambdaProduct {
 public:
  LambdaProduct() = default;
  explicit LambdaProduct(LambdaSpec factor);
  explicit LambdaProduct(std::vector<LambdaSpec> factors);

  const std::vector<LambdaSpec>& factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }
  int weight() const;
  /// Largest depth among the factors.
  std::size_t max_depth() const;

  std::string to_string() const;

  friend LambdaProduct operator*(const LambdaProduct& a, const LambdaProduct& b);
  friend bool operator==(const LambdaProduct&, const LambdaProduct&) = default;
  friend std::strong_ordering operator<=>(const LambdaProduct& a, const LambdaProduct& b);

 private:
  std::vector<LambdaSpec> factors_;
};

/// Exact rational linear combination of bodies. Identical bodies are merged,
/// zero coefficients dropped, and terms kept in the body's canonical order,
/// so the text form is byte-stable.
template <class Body>
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(Body body, const Rational& coefficient = Rational(1)) {
    add(std::move(body), coefficient);
  }

  void add(Body body, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(body), coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& rhs) {
    for (const auto& [body, c] : rhs.terms_) add(body, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& rhs) {
    for (const auto& [body, c] : rhs.terms_) add(body, -c);
    return *this;
  }
  FormalSum& operator*=(const Rational& scale) {
    if (scale.is_zero()) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= scale;
    }
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(FormalSum a, const Rational& s) { return a *= s; }

  const std::map<Body, Rational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Rational coefficient(const Body& body) const {
    const auto it = terms_.find(body);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Sum of absolute multiplicities; meaningful when all coefficients are
  /// integers (shuffle and stuffle products).
  Rational total_multiplicity() const {
    Rational total;
    for (const auto& entry : terms_) total += entry.second.abs();
    return total;
  }

  /// "c1*body1 + c2*body2 - ..."; "0" for the empty sum.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [body, c] : terms_) {
      const bool negative = c.sign() < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const Rational magnitude = c.abs();
      const std::string text = body.to_string();
      if (text == "1") {
        out += magnitude.to_string();
      } else if (magnitude == Rational(1)) {
        out += text;
      } else {
        out += magnitude.to_string() + "*" + text;
      }
    }
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<Body, Rational> terms_;
};

using LambdaSum = FormalSum<LambdaProduct>;
using WordSum = FormalSum<Word>;

/// A single polylogarithm as a one-term sum.
LambdaSum as_sum(const LambdaSpec& spec, const Rational& coefficient = Rational(1));

/// Distributes the product of two sums.
LambdaSum multiply(const LambdaSum& a, const LambdaSum& b);

/// Parses the canonical text produced by LambdaSum::to_string.
LambdaSum parse_lambda_sum(std::string_view text);

}  // namespace polylog
