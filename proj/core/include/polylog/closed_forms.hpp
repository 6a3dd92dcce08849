#pragma once

#include <map>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "polylog/precision.hpp"
#include "polylog/rational.hpp"

namespace polylog {

/// A_r = Li_r(1/2), P_r = (ln 2)^r / r!, Z_r = (-1)^r zeta(r), computed on
/// demand and cached. None of them goes through the polylog evaluator.
class ClosedFormConstants {
 public:
  explicit ClosedFormConstants(const Precision& prec);

  const Precision& precision() const noexcept { return prec_; }
  const BigReal& A(int r);
  const BigReal& P(int r);
  /// DivergenceError for r = 1.
  const BigReal& Z(int r);
  /// Riemann zeta at an integer r >= 2.
  BigReal zeta(int r);

 private:
  Precision prec_;
  BigReal ln2_;
  std::map<int, BigReal> a_;
  std::map<int, BigReal> p_;
  std::map<int, BigReal> z_;
};

/// zeta({3,1}^n) = 2 pi^(4n) / (4n+2)!.
BigReal zagier(int n, const Precision& prec);
/// zeta(2, {1,3}^n) via zeta({4}^m) and odd zeta products.
BigReal z213(int n, const Precision& prec);
/// mu({p}^n) = (ln q)^n / n! with q = p / (p - 1); needs p > 1.
BigReal mu_power(const Rational& p, int n, const Precision& prec);
/// mu({-1}^m, 1) for m >= 1.
BigReal t4(int m, const Precision& prec);
/// mu({-1}^m, 1, {-1}^n) for m >= 1, n >= 0.
BigReal t5(int m, int n, const Precision& prec);
/// delta(-n) = 1 + sum_{j<n} C(n,j) delta(-j), exactly.
mpz_class delta_neg(int n);
/// delta(1, -n) = sum_v C(n,v) B_(n-v) delta(-v) / (v+1), exactly, n >= 1.
Rational delta_one_neg(int n);
/// lambda(0,...,0; b) = prod 1/(b_j - 1). DomainError if some b_j = 1.
Rational zero_string(const std::vector<Rational>& bases);
/// Li_2(1/2) = pi^2/12 - (ln 2)^2/2.
BigReal li2_half(const Precision& prec);
/// delta(2, {1}^n) = zeta(n+2) - sum_{r=1}^{n+2} A_r P_(n+2-r).
BigReal zeta_li_log(int n, const Precision& prec);
/// delta(1, 2n-1) = (1/2) sum_{j=1}^{2n-1} (-1)^(j+1) A_j A_(2n-j), n >= 1.
BigReal delta_odd(int n, const Precision& prec);
/// delta(1,2) = 5/7 A_2 A_1 - 2/7 A_3 + 5/21 A_1^3.
BigReal delta_12(const Precision& prec);

/// Catalog lookup by name: "zagier", "z213", "mu_power" (p, n), "t4", "t5",
/// "delta_neg", "delta_one_neg", "zero_string" (bases...), "li2_half",
/// "zeta_li_log", "delta_odd", "delta_12". ArgumentError for an unknown
/// name, a wrong parameter count or an out-of-range parameter.
BigReal closed_form(std::string_view id, const std::vector<Rational>& params, const Precision& prec);

}  // namespace polylog
