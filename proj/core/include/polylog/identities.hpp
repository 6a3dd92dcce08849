#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polylog/formal_sum.hpp"
#include "polylog/model.hpp"
#include "polylog/rational.hpp"

namespace polylog {

/// lhs = rhs as exact formal sums of polylogarithm products.
struct Identity {
  LambdaSum lhs;
  LambdaSum rhs;
  std::string tag;
};

/// Reinterprets a word sum through value(w) = (-1)^depth * lambda(word_to_lambda(w)).
LambdaSum to_lambda_sum(const WordSum& words);

/// All merges of (s, a) with (t, b), repeated according to multiplicity.
/// Column j of a merge has base a_n * b_m, where n and m count the entries
/// of each input consumed so far (a_0 = b_0 = 1). ArgumentError on length
/// mismatch.
std::vector<LambdaSpec> stuffle_set(const std::vector<int>& s, const std::vector<int>& t,
                                    const std::vector<Rational>& a, const std::vector<Rational>& b);

/// lambda(u) * lambda(v) = sum over the stuffle set.
Identity stuffle_identity(const LambdaSpec& u, const LambdaSpec& v);

/// Exact check of f(a) f(b) = sum over merges of f(c), f(x) = prod 1/(x_j - 1).
/// DomainError when some base equals 1.
bool rational_stuffle_check(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Order-preserving interleavings with multiplicity.
WordSum shuffle_words(const Word& w1, const Word& w2);

/// Integral product identity: value(w1) * value(w2) = sum of shuffled words.
Identity shuffle_identity(const Word& w1, const Word& w2);

/// lambda(w) = sign * lambda(dual w) for a convergent word.
Identity duality_identity(const Word& w);

/// Expansion of lambda(s; b_1^n, ..., b_k^n) as n^(s-k) times the sum over
/// all n^k dressings b_j -> zeta_n^(i_j) b_j.
struct CyclotomicExpansion {
  LambdaSpec lhs;
  int order = 1;
  Rational scale;
  /// Root exponents i_1..i_k of each dressing, in lexicographic order.
  std::vector<std::vector<int>> dressings;
  /// Present for n <= 2, where every dressing is real.
  std::optional<Identity> identity;

  /// Symbolic text with "w" standing for exp(2 pi i / n).
  std::string to_string() const;
};

/// `roots` holds the bases b_j (not their powers). ArgumentError for n < 1
/// or an exponent < 1.
CyclotomicExpansion cyclotomic_expand(const LambdaSpec& roots, int n);

/// lambda(1+s_k, ..., 1+s_1; -1, ..., -1) as a signed sum of
/// 2^(s_1+...+s_k) unit Euler sums. ArgumentError for negative entries.
Identity alternating_to_mu(const std::vector<int>& s);

/// mu({-1}{1}^s_k ... {-1}{1}^s_1) as the sum over independent
/// compositions of each s_j + 1 of alternating lambda strings.
Identity mu_to_compositions(const std::vector<int>& s);

/// delta(s_1..s_k) = (-1)^k mu(-1, {1}^(s_k-1), ..., -1, {1}^(s_1-1)).
/// ArgumentError for entries < 1.
Identity delta_mu_dual(const std::vector<int>& s);

/// delta(s_1+2, {1}^r_1, ..., s_m+2, {1}^r_m)
///   = (-1)^(r+m) mu({-1}^(r_m+1), {1}^(s_m+1), ..., {-1}^(r_1+1), {1}^(s_1+1))
/// with r = r_1 + ... + r_m. ArgumentError for negative entries or
/// mismatched lengths.
Identity delta_mu_dual_symmetric(const std::vector<int>& s, const std::vector<int>& r);

/// Sum over n_1 <= n_2 <= ... <= n_k of prod n_j^-s_j as a sum of MZVs:
/// one term per way of merging adjacent equalities, each reversed.
LambdaSum weak_chain_expand(const std::vector<int>& s);

/// zeta(s) + (-1)^k zeta(reverse s) as a combination of products of MZVs of
/// depth below k. Leading ones arising inside the expansion are regularized
/// with the stuffle product. DivergenceError unless s_1, s_k >= 2.
Identity reversal_reduction(const std::vector<int>& s);

/// Exact Bernoulli number with B_1 = -1/2. ArgumentError for n < 0.
Rational bernoulli(int n);

/// Identity corpus with every body of weight <= max_weight, in a fixed order.
std::vector<Identity> identity_corpus(int max_weight);

/// One JSON object per line with keys "lhs", "rhs" and "tag".
std::string export_json_lines(const std::vector<Identity>& identities);

}  // namespace polylog
