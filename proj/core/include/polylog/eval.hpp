#pragma once

#include <vector>

#include "polylog/formal_sum.hpp"
#include "polylog/model.hpp"
#include "polylog/precision.hpp"
#include "polylog/rational.hpp"

namespace polylog {

/// Smallest base modulus summed directly: 3/2.
Rational geometric_threshold();

/// Number of outer terms and the rigorous tail bound after truncation.
struct TruncationPlan {
  long terms = 0;
  double log10_tail_bound = 0.0;
};

/// Smallest N whose tail bound is below 10^log10_target. Requires every
/// |b_j| > 1. The bound is r^(N+1) (N+1)^e / (1 - rho) with r = 1/min|b_j|,
/// e = (k-1) + sum of max(0, -s_j) and rho = r (1 + 1/(N+1))^e.
TruncationPlan plan_truncation(const LambdaSpec& spec, double log10_target);

/// Partial nested sum over outer index n_1 <= terms, for any |b_j| > 1.
BigReal partial_nested_sum(const LambdaSpec& spec, long terms, const Precision& prec);

struct DirectSum {
  BigReal value;
  TruncationPlan plan;
};

/// Direct geometric summation with its truncation data. UnsupportedError
/// when some |b_j| < 3/2, DivergenceError when the spec diverges.
DirectSum direct_nested_sum_report(const LambdaSpec& spec, const Precision& prec);

BigReal direct_nested_sum(const LambdaSpec& spec, const Precision& prec);

/// One split of the convolution. The empty spec stands for the value 1.
struct HolderTerm {
  int split = 0;
  int sign = 1;
  LambdaSpec left;   // reversed complemented prefix, bases scaled by q
  LambdaSpec right;  // suffix, bases scaled by p
};

struct HolderSplit {
  Rational p;
  Rational q;
  std::vector<HolderTerm> terms;
};

/// lambda(word_to_lambda(w)) = sum over terms of sign * lambda(left) * lambda(right),
/// with 1/p + 1/q = 1. ArgumentError unless p > 1, DivergenceError unless
/// the word is convergent at both ends.
HolderSplit holder_split(const Word& w, const Rational& p);

/// p used by evaluate_lambda: 2 when every half-base modulus is then at
/// least 3/2, otherwise the p that balances the worst left and right moduli.
Rational choose_holder_parameter(const Word& w);

/// Evaluates through the split at the given p. UnsupportedError when some
/// half has a base of modulus <= 1.
BigReal evaluate_lambda_holder(const LambdaSpec& spec, const Rational& p, const Precision& prec);

/// Any convergent spec. Direct summation when min|b_j| >= 3/2 or some
/// exponent is non-positive, Hölder convolution otherwise.
BigReal evaluate_lambda(const LambdaSpec& spec, const Precision& prec);

/// Integral of the word over [0,1], i.e. (-1)^depth * lambda.
BigReal evaluate_word(const Word& w, const Precision& prec);

BigReal evaluate_z(const MzvString& z, const Precision& prec);

/// sum_{n_1 > ... > n_k > 0} p^-n_1 prod n_j^-s_j. ArgumentError for p < 1
/// or s_j < 1, DivergenceError for p = 1 and s_1 = 1.
BigReal evaluate_zp(const Rational& p, const std::vector<int>& s, const Precision& prec);

/// J(x) = sum_{n_1 > n_2 > 0} x^n_1 / (n_1^2 n_2) for -1 <= x <= 1.
BigReal evaluate_J(const Rational& x, const Precision& prec);

/// Gauss series 2F1(a, b; c; z) for |z| <= 1/2. DomainError at a pole in
/// c or for |z| > 1/2.
BigReal hyp2f1_series(const BigReal& a, const BigReal& b, const BigReal& c, const Rational& z,
                      const Precision& prec);

BigReal evaluate(const LambdaSum& sum, const Precision& prec);
BigReal evaluate(const WordSum& sum, const Precision& prec);

}  // namespace polylog
