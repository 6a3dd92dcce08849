#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "polylog/rational.hpp"

namespace polylog {

/// One (exponent, base) column of a multiple polylogarithm.
struct LambdaTerm {
  int exponent = 1;
  Rational base{1};

  friend bool operator==(const LambdaTerm&, const LambdaTerm&) = default;
};

/// Multiple polylogarithm
///   lambda(s_1..s_k; b_1..b_k) = sum_{nu_j >= 1} prod_j b_j^{-nu_j} (nu_j + ... + nu_k)^{-s_j}.
/// The empty spec is legal and has value 1. Divergent specs can be built
/// and manipulated symbolically; only numeric evaluation rejects them.
class LambdaSpec {
 public:
  LambdaSpec() = default;
  explicit LambdaSpec(std::vector<LambdaTerm> terms) : terms_(std::move(terms)) {}
  /// Exponents and bases given separately; ArgumentError on length mismatch.
  LambdaSpec(const std::vector<int>& exponents, const std::vector<Rational>& bases);

  /// All bases equal to `base` (zeta for 1, delta for 2).
  static LambdaSpec uniform(const std::vector<int>& exponents, const Rational& base);
  static LambdaSpec zeta(const std::vector<int>& exponents) { return uniform(exponents, 1); }
  static LambdaSpec delta(const std::vector<int>& exponents) { return uniform(exponents, 2); }
  /// Unit Euler sum mu(b_1..b_k): every exponent 1.
  static LambdaSpec mu(const std::vector<Rational>& bases);

  const std::vector<LambdaTerm>& terms() const noexcept { return terms_; }
  std::size_t depth() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  /// Sum of exponents.
  int weight() const;
  std::vector<int> exponents() const;
  std::vector<Rational> bases() const;
  /// Smallest |b_j|; 0 for the empty spec.
  Rational min_abs_base() const;

  /// Canonical text "L[s1,...,sk|b1,...,bk]".
  std::string to_string() const;
  /// Inverse of to_string; ArgumentError on malformed input.
  static LambdaSpec parse(std::string_view text);

  friend bool operator==(const LambdaSpec&, const LambdaSpec&) = default;
  /// Canonical order: depth, then exponents, then bases, lexicographically.
  friend std::strong_ordering operator<=>(const LambdaSpec& a, const LambdaSpec& b);

 private:
  std::vector<LambdaTerm> terms_;
};

/// Outcome of a convergence test with a human-readable reason.
struct ConvergenceReport {
  bool convergent = false;
  std::string reason;

  explicit operator bool() const noexcept { return convergent; }
};

/// Convergent iff either all s_j >= 1, all |b_j| >= 1 and (b_1, s_1) != (1, 1),
/// or all |b_j| > 1 (then any integer exponents are allowed).
ConvergenceReport check_convergence(const LambdaSpec& spec);

/// Signed-exponent string of an alternating Euler sum,
///   z(s_1..s_k) = sum_{n_1 > ... > n_k > 0} prod_j n_j^{-|s_j|} sigma_j^{n_j},
/// with sigma_j = signum(s_j).
struct MzvString {
  std::vector<int> entries;

  MzvString() = default;
  MzvString(std::initializer_list<int> e) : entries(e) {}
  explicit MzvString(std::vector<int> e) : entries(std::move(e)) {}

  /// ArgumentError when an entry is zero.
  void validate() const;
  /// Not convergent exactly when the leading entry is an unsigned 1.
  bool convergent() const { return entries.empty() || entries.front() != 1; }
  int weight() const;

  friend bool operator==(const MzvString&, const MzvString&) = default;
};

/// Converts to lambda form. The base of column j is the running product
/// sigma_1 * ... * sigma_j. DivergenceError on a leading unsigned 1.
LambdaSpec lambda_from_z_string(const MzvString& z);

/// Iterated-integral word: forms a_1..a_s, where a_r = 0 stands for
/// omega_0 = dx/x and a_r = b for omega(b) = dx/(x - b).
struct Word {
  std::vector<Rational> forms;

  Word() = default;
  Word(std::initializer_list<Rational> f) : forms(f) {}
  explicit Word(std::vector<Rational> f) : forms(std::move(f)) {}

  std::size_t length() const noexcept { return forms.size(); }
  /// Number of non-zero forms.
  std::size_t depth() const;
  /// The integral over [0,1] converges when the last form is non-zero and
  /// the first form is not 1.
  bool convergent() const;

  /// Canonical text "W[a1,...,as]".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Canonical order: length, then forms lexicographically.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

/// Maps lambda(s; b) to the word whose integral over [0,1] equals
/// (-1)^k lambda(s; b): the form at position s_1 + ... + s_j is b_j, the
/// others are 0. UnsupportedError for an exponent <= 0.
Word lambda_to_word(const LambdaSpec& spec);

/// Inverse of lambda_to_word by collecting runs of omega_0.
/// DivergenceError when the word ends in omega_0.
LambdaSpec word_to_lambda(const Word& w);

/// Dual word with its value sign: value(w) = sign * value(dual), where
/// value(w) denotes lambda(word_to_lambda(w)).
struct DualWord {
  Word word;
  int sign = 1;
};

/// Reverses the word and replaces every form a by 1 - a. DivergenceError
/// when the input is divergent or its dual is (first form equal to 1).
DualWord dual_word(const Word& w);

/// MZV duality on unsigned argument strings:
/// (a_1+2, {1}^r_1, ..., a_m+2, {1}^r_m) -> (r_m+2, {1}^a_m, ..., r_1+2, {1}^a_1).
/// DivergenceError unless s_1 >= 2; ArgumentError for entries < 1.
std::vector<int> mzv_dual_string(const std::vector<int>& s);

/// Nested-sum arguments of Li_{s_k..s_1}(x_k..x_1) = sum_{n_1 > ... > n_k} prod n_j^{-s_j} x_j^{n_j}.
/// Stored in the order j = 1..k, i.e. n_1 outermost.
struct GoncharovArgs {
  std::vector<int> exponents;
  std::vector<Rational> arguments;

  friend bool operator==(const GoncharovArgs&, const GoncharovArgs&) = default;
};

/// x_1 = 1/b_1, x_j = b_{j-1}/b_j. DomainError for a zero base.
GoncharovArgs to_goncharov(const LambdaSpec& spec);
/// b_j = prod_{i <= j} 1/x_i.
LambdaSpec from_goncharov(const GoncharovArgs& args);

}  // namespace polylog
