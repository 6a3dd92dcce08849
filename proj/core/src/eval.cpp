#include "polylog/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "polylog/error.hpp"

namespace polylog {

namespace {

// Tolerance margin for each product term of a convolution.
double holder_term_target(const Precision& prec, std::size_t terms) {
  return prec.log10_tolerance() - std::log10(2.0 * static_cast<double>(terms)) - 2.0;
}

void require_convergent(const LambdaSpec& spec) {
  const ConvergenceReport report = check_convergence(spec);
  if (report) return;
  bool nonpositive = false;
  bool unit = false;
  for (const auto& t : spec.terms()) {
    if (t.exponent < 1) nonpositive = true;
    if (t.base.abs() == Rational(1)) unit = true;
  }
  if (nonpositive && unit && !(spec.min_abs_base() < Rational(1))) {
    throw UnsupportedError("cannot evaluate " + spec.to_string() + ": " + report.reason);
  }
  throw DivergenceError(spec.to_string() + " diverges: " + report.reason);
}

bool all_beyond_unit(const LambdaSpec& spec) {
  return std::all_of(spec.terms().begin(), spec.terms().end(),
                     [](const LambdaTerm& t) { return t.base.abs() > Rational(1); });
}

double log10_tail(double log10_r, int e, long n) {
  const double next = static_cast<double>(n + 1);
  const double rho = log10_r + e * std::log10(1.0 + 1.0 / next);
  if (rho >= 0.0) return std::numeric_limits<double>::infinity();
  return (n + 1) * log10_r + e * std::log10(next) - std::log10(1.0 - std::pow(10.0, rho));
}

BigReal sum_direct(const LambdaSpec& spec, const Precision& prec, double log10_target,
                   TruncationPlan* plan_out) {
  const TruncationPlan plan = plan_truncation(spec, log10_target);
  if (plan_out != nullptr) *plan_out = plan;
  return partial_nested_sum(spec, plan.terms, prec);
}

}  // namespace

Rational geometric_threshold() { return Rational(3, 2); }

TruncationPlan plan_truncation(const LambdaSpec& spec, double log10_target) {
  if (spec.empty()) return {0, -std::numeric_limits<double>::infinity()};
  if (!all_beyond_unit(spec)) {
    throw UnsupportedError("direct summation of " + spec.to_string() + " needs every |b_j| > 1");
  }
  const double log10_r = -std::log10(spec.min_abs_base().to_double());
  int e = static_cast<int>(spec.depth()) - 1;
  for (const auto& t : spec.terms()) e += std::max(0, -t.exponent);

  // The bound is eventually decreasing; gallop past its maximum, then bisect.
  long lo = static_cast<long>(spec.depth());
  if (log10_tail(log10_r, e, lo) < log10_target) return {lo, log10_tail(log10_r, e, lo)};
  long hi = lo + 1;
  while (!(log10_tail(log10_r, e, hi) < log10_target)) {
    lo = hi;
    hi *= 2;
    if (hi > (1L << 40)) throw UnsupportedError("truncation point out of range");
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (log10_tail(log10_r, e, mid) < log10_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, log10_tail(log10_r, e, hi)};
}

BigReal partial_nested_sum(const LambdaSpec& spec, long terms, const Precision& prec) {
  BigReal total(prec);
  if (spec.empty()) return BigReal(1, prec);
  const std::size_t k = spec.depth();
  for (const auto& t : spec.terms()) {
    if (t.base.is_zero()) throw DomainError("zero base in " + spec.to_string());
  }

  // T_j(m) = m^-s_j U_j(m) with U_j(m+1) = (U_j(m) + T_{j+1}(m)) / b_j and
  // T_{k+1}(m) = [m = 0]; the sum is sum_m T_1(m). Every quantity stays
  // bounded by the true terms, so no cancellation occurs.
  std::vector<BigReal> inverse_base;
  inverse_base.reserve(k);
  for (const auto& t : spec.terms()) inverse_base.emplace_back(t.base.inverse(), prec);
  std::vector<BigReal> u(k, BigReal(prec));
  std::vector<BigReal> prev(k, BigReal(prec));
  std::vector<BigReal> next(k, BigReal(prec));
  const auto& cols = spec.terms();

  for (long m = 1; m <= terms; ++m) {
    for (std::size_t jj = k; jj-- > 0;) {
      if (jj + 1 == k) {
        if (m == 1) mpfr_add_ui(u[jj].get(), u[jj].get(), 1, MPFR_RNDN);
      } else {
        mpfr_add(u[jj].get(), u[jj].get(), prev[jj + 1].get(), MPFR_RNDN);
      }
      mpfr_mul(u[jj].get(), u[jj].get(), inverse_base[jj].get(), MPFR_RNDN);
      mpfr_set(next[jj].get(), u[jj].get(), MPFR_RNDN);
      const int s = cols[jj].exponent;
      for (int i = 0; i < s; ++i) mpfr_div_ui(next[jj].get(), next[jj].get(), m, MPFR_RNDN);
      for (int i = 0; i < -s; ++i) mpfr_mul_ui(next[jj].get(), next[jj].get(), m, MPFR_RNDN);
    }
    mpfr_add(total.get(), total.get(), next[0].get(), MPFR_RNDN);
    std::swap(prev, next);
  }
  return total;
}

DirectSum direct_nested_sum_report(const LambdaSpec& spec, const Precision& prec) {
  require_convergent(spec);
  if (!spec.empty() && spec.min_abs_base() < geometric_threshold()) {
    throw UnsupportedError("direct summation of " + spec.to_string() +
                           " needs every |b_j| >= 3/2; use the Hölder convolution");
  }
  TruncationPlan plan;
  BigReal value = sum_direct(spec, prec, prec.log10_tolerance(), &plan);
  return {std::move(value), plan};
}

BigReal direct_nested_sum(const LambdaSpec& spec, const Precision& prec) {
  return direct_nested_sum_report(spec, prec).value;
}

HolderSplit holder_split(const Word& w, const Rational& p) {
  if (!(p > Rational(1))) throw ArgumentError("Hölder parameter must exceed 1, got " + p.to_string());
  if (!w.convergent()) throw DivergenceError("word " + w.to_string() + " is divergent");
  const Rational q = p / (p - Rational(1));
  const std::size_t s = w.length();
  const long k = static_cast<long>(w.depth());

  HolderSplit result{p, q, {}};
  result.terms.reserve(s + 1);
  for (std::size_t r = 0; r <= s; ++r) {
    std::vector<Rational> left_forms;
    for (std::size_t i = r; i-- > 0;) left_forms.push_back(Rational(1) - w.forms[i]);
    std::vector<Rational> right_forms(w.forms.begin() + static_cast<long>(r), w.forms.end());

    LambdaSpec left = left_forms.empty() ? LambdaSpec() : word_to_lambda(Word(left_forms));
    LambdaSpec right = right_forms.empty() ? LambdaSpec() : word_to_lambda(Word(right_forms));
    std::vector<LambdaTerm> lt = left.terms();
    for (auto& t : lt) t.base *= q;
    std::vector<LambdaTerm> rt = right.terms();
    for (auto& t : rt) t.base *= p;

    const long parity = k + static_cast<long>(r) + static_cast<long>(lt.size()) +
                        static_cast<long>(rt.size());
    result.terms.push_back(HolderTerm{static_cast<int>(r), parity % 2 == 0 ? 1 : -1,
                                      LambdaSpec(std::move(lt)), LambdaSpec(std::move(rt))});
  }
  return result;
}

Rational choose_holder_parameter(const Word& w) {
  std::optional<Rational> a_min;
  std::optional<Rational> c_min;
  for (const auto& a : w.forms) {
    if (!a.is_zero()) {
      const Rational m = a.abs();
      if (!a_min || m < *a_min) a_min = m;
    }
    if (a != Rational(1)) {
      const Rational c = (Rational(1) - a).abs();
      if (!c_min || c < *c_min) c_min = c;
    }
  }
  if (!a_min || !c_min) throw DivergenceError("word " + w.to_string() + " is divergent");
  const Rational two(2);
  if (two * *a_min >= geometric_threshold() && two * *c_min >= geometric_threshold()) return two;
  return (*a_min + *c_min) / *a_min;
}

BigReal evaluate_lambda_holder(const LambdaSpec& spec, const Rational& p, const Precision& prec) {
  require_convergent(spec);
  if (spec.empty()) return BigReal(1, prec);
  const Word w = lambda_to_word(spec);
  const HolderSplit split = holder_split(w, p);
  const double target = holder_term_target(prec, split.terms.size());

  std::map<LambdaSpec, BigReal> cache;
  auto half = [&](const LambdaSpec& h) -> const BigReal& {
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
    if (!h.empty() && !all_beyond_unit(h)) {
      throw UnsupportedError("Hölder parameter " + p.to_string() + " leaves " + h.to_string() +
                             " outside the geometric region");
    }
    BigReal v = h.empty() ? BigReal(1, prec) : sum_direct(h, prec, target, nullptr);
    return cache.emplace(h, std::move(v)).first->second;
  };

  BigReal total(prec);
  for (const auto& term : split.terms) {
    BigReal product = half(term.left) * half(term.right);
    if (term.sign < 0) {
      total -= product;
    } else {
      total += product;
    }
  }
  return total;
}

BigReal evaluate_lambda(const LambdaSpec& spec, const Precision& prec) {
  require_convergent(spec);
  if (spec.empty()) return BigReal(1, prec);
  if (!(spec.min_abs_base() < geometric_threshold())) {
    return sum_direct(spec, prec, prec.log10_tolerance(), nullptr);
  }
  const bool nonpositive = std::any_of(spec.terms().begin(), spec.terms().end(),
                                       [](const LambdaTerm& t) { return t.exponent < 1; });
  if (nonpositive) return sum_direct(spec, prec, prec.log10_tolerance(), nullptr);
  return evaluate_lambda_holder(spec, choose_holder_parameter(lambda_to_word(spec)), prec);
}

BigReal evaluate_word(const Word& w, const Precision& prec) {
  BigReal v = evaluate_lambda(word_to_lambda(w), prec);
  if (w.depth() % 2 == 1) return -v;
  return v;
}

BigReal evaluate_z(const MzvString& z, const Precision& prec) {
  return evaluate_lambda(lambda_from_z_string(z), prec);
}

BigReal evaluate_zp(const Rational& p, const std::vector<int>& s, const Precision& prec) {
  if (p < Rational(1)) throw ArgumentError("zp needs p >= 1, got " + p.to_string());
  for (int v : s) {
    if (v < 1) throw ArgumentError("zp arguments must be positive integers, got " + std::to_string(v));
  }
  if (p == Rational(1) && !s.empty() && s.front() == 1) {
    throw DivergenceError("zp(1, 1, ...) diverges: leading argument 1 with p = 1");
  }
  return evaluate_lambda(LambdaSpec::uniform(s, p), prec);
}

BigReal evaluate_J(const Rational& x, const Precision& prec) {
  if (x.abs() > Rational(1)) throw DomainError("J(x) needs |x| <= 1, got " + x.to_string());
  if (x.is_zero()) return BigReal(prec);
  const Rational b = x.inverse();
  return evaluate_lambda(LambdaSpec({2, 1}, {b, b}), prec);
}

BigReal hyp2f1_series(const BigReal& a, const BigReal& b, const BigReal& c, const Rational& z,
                      const Precision& prec) {
  if (z.abs() > Rational(1, 2)) throw DomainError("2F1 series needs |z| <= 1/2, got " + z.to_string());
  if (mpfr_integer_p(c.get()) && c.sign() <= 0) throw DomainError("2F1 parameter c is a pole");
  const BigReal zr(z, prec);
  const double za = std::fabs(z.to_double());
  const double a1 = std::fabs(a.to_double() - 1.0);
  const double b1 = std::fabs(b.to_double() - 1.0);
  const double c1 = std::fabs(c.to_double() - 1.0);
  const double target = prec.log10_tolerance();

  BigReal total(1, prec);
  BigReal term(1, prec);
  for (long n = 0;; ++n) {
    // term_{n+1} = term_n (a+n)(b+n) z / ((c+n)(n+1))
    BigReal an = a + BigReal(n, prec);
    BigReal bn = b + BigReal(n, prec);
    BigReal cn = c + BigReal(n, prec);
    term *= an;
    term *= bn;
    term *= zr;
    term /= cn;
    term /= (n + 1);
    if (term.is_zero()) break;
    total += term;
    const double m1 = static_cast<double>(n + 2);
    if (m1 > c1) {
      const double ratio = za * (1.0 + a1 / m1) * (1.0 + b1 / m1) / (1.0 - c1 / m1);
      if (ratio < 1.0) {
        const double bound = term.log10_magnitude() + std::log10(ratio) - std::log10(1.0 - ratio);
        if (bound < target) break;
      }
    }
  }
  return total;
}

BigReal evaluate(const LambdaSum& sum, const Precision& prec) {
  std::map<LambdaSpec, BigReal> cache;
  BigReal total(prec);
  for (const auto& [product, c] : sum.terms()) {
    BigReal v(c, prec);
    for (const auto& f : product.factors()) {
      auto it = cache.find(f);
      if (it == cache.end()) it = cache.emplace(f, evaluate_lambda(f, prec)).first;
      v *= it->second;
    }
    total += v;
  }
  return total;
}

BigReal evaluate(const WordSum& sum, const Precision& prec) {
  BigReal total(prec);
  for (const auto& [word, c] : sum.terms()) total += BigReal(c, prec) * evaluate_word(word, prec);
  return total;
}

}  // namespace polylog
