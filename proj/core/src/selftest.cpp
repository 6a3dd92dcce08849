#include "polylog/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "polylog/closed_forms.hpp"
#include "polylog/error.hpp"
#include "polylog/eval.hpp"
#include "polylog/expr.hpp"
#include "polylog/identities.hpp"
#include "polylog/relations.hpp"

namespace polylog {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Tracks the worst log10 error over a group of comparisons.
class Tally {
 public:
  Tally(const char* what, double log10_tol) : what_(what), tol_(log10_tol) {}

  void compare(const BigReal& a, const BigReal& b) {
    const BigReal diff = (a - b).abs();
    const double e = diff.is_zero() ? -1e9 : static_cast<double>(diff.log10_magnitude());
    worst_ = std::max(worst_, e);
    ++count_;
    if (!within(a, b, tol_)) failed_ = true;
  }
  void fail(const std::string& why) {
    failed_ = true;
    notes_ += (notes_.empty() ? "" : "; ") + why;
  }

  Outcome outcome() const {
    std::ostringstream out;
    out << count_ << " " << what_ << ", worst error ";
    if (worst_ < -1e8) {
      out << "0";
    } else {
      out << "1e" << worst_;
    }
    out << " vs 1e" << tol_;
    if (!notes_.empty()) out << "; " << notes_;
    return {!failed_, out.str()};
  }

 private:
  const char* what_;
  double tol_;
  double worst_ = -1e9;
  int count_ = 0;
  bool failed_ = false;
  std::string notes_;
};

std::vector<int> repeat(std::vector<int> head, const std::vector<int>& block, int n) {
  for (int i = 0; i < n; ++i) head.insert(head.end(), block.begin(), block.end());
  return head;
}

BigReal z(const std::vector<int>& s, const Precision& prec) { return evaluate_z(MzvString(s), prec); }

std::string join(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out;
}

Outcome expect_relation(const std::string& source, const IntVector& want) {
  const ExprValue v = eval_expression(*parse_expression(source), 50);
  const auto& r = std::get<RelationResult>(v);
  if (!r.found()) return {false, "no relation found"};
  return {*r.coefficients == want, join(*r.coefficients)};
}

// Words whose forms and dual forms all have modulus >= 1 or are 0.
Word random_word(std::mt19937& rng, int max_length) {
  static const std::vector<Rational> pool{0, 1, -1, 2, -2, 3, -3, Rational(5, 2), Rational(-3, 2)};
  std::uniform_int_distribution<int> len(1, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  while (true) {
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.forms.push_back(pool[pick(rng)]);
    if (w.convergent()) return w;
  }
}

Outcome euler() {
  const Precision p(50);
  Tally t("comparison", -45);
  t.compare(z({2, 1}, p), z({3}, p));
  return t.outcome();
}

Outcome ezface_golden() {
  const Precision p = Precision::for_weight(50, 6);
  const ExprValue v = eval_expression(*parse_expression("Pi^6/z(6)"), 50);
  const std::string text = format_value(v, 50);
  const bool shape = text.rfind("945.000000000000000000000000000000000000000000", 0) == 0;
  const bool close = within(std::get<BigReal>(v), BigReal(945, p), -44);
  return {shape && close, text};
}

Outcome zagier_check() {
  const Precision p(50);
  Tally t("values", -45);
  for (int n = 0; n <= 3; ++n) t.compare(z(repeat({}, {3, 1}, n), p), zagier(n, p));
  return t.outcome();
}

Outcome z213_family() {
  const Precision p(50);
  Tally t("values", -40);
  for (int n = 1; n <= 2; ++n) t.compare(z(repeat({2}, {1, 3}, n), p), z213(n, p));
  return t.outcome();
}

Outcome duality(SelftestLevel level) {
  const Precision p(50);
  Tally t("pairs", -40);
  Tally exact("example", -45);
  exact.compare(evaluate_lambda(LambdaSpec({2, 1}, {1, -1}), p), -evaluate_lambda(LambdaSpec({1, 2}, {2, 1}), p));
  std::mt19937 rng(20240521);
  const int cases = level == SelftestLevel::Full ? 40 : 12;
  for (int i = 0; i < cases; ++i) {
    const Word w = random_word(rng, 8);
    const DualWord d = dual_word(w);
    BigReal rhs = evaluate_lambda(word_to_lambda(d.word), p);
    if (d.sign < 0) rhs = -rhs;
    t.compare(evaluate_lambda(word_to_lambda(w), p), rhs);
  }
  Outcome a = exact.outcome();
  Outcome b = t.outcome();
  return {a.passed && b.passed, a.detail + "; random words: " + b.detail};
}

Outcome holder_invariance() {
  const Precision p(50);
  Tally t("split comparisons", -40);
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Word w = random_word(rng, 8);
    const LambdaSpec spec = word_to_lambda(w);
    const BigReal v2 = evaluate_lambda_holder(spec, 2, p);
    t.compare(v2, evaluate_lambda_holder(spec, 3, p));
    t.compare(v2, evaluate_lambda_holder(spec, Rational(3, 2), p));
  }
  return t.outcome();
}

Outcome closed_forms() {
  const Precision p(50);
  Tally t("values", -40);
  const BigReal l2 = ln(Rational(2), p);
  BigReal power(1, p);
  BigReal fact(1, p);
  for (int n = 1; n <= 6; ++n) {
    power *= l2;
    fact *= n;
    t.compare(evaluate_lambda(LambdaSpec::delta(std::vector<int>(static_cast<std::size_t>(n), 1)), p), power / fact);
  }
  for (int n = 0; n <= 4; ++n) {
    t.compare(evaluate_lambda(LambdaSpec::mu(std::vector<Rational>(static_cast<std::size_t>(n), 3)), p),
              mu_power(3, n, p));
  }
  t.compare(evaluate_lambda(LambdaSpec::delta({2}), p), li2_half(p));
  t.compare(evaluate_lambda(LambdaSpec::delta({1, 2}), p), delta_12(p));
  return t.outcome();
}

Outcome unit_euler_sums() {
  const Precision p(50);
  Tally t("(m,n) pairs", -40);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 2; ++n) {
      std::vector<Rational> bases(static_cast<std::size_t>(m), -1);
      bases.emplace_back(1);
      bases.insert(bases.end(), static_cast<std::size_t>(n), Rational(-1));
      const DualWord d = dual_word(lambda_to_word(LambdaSpec::mu(bases)));
      BigReal via_dual = evaluate_lambda(word_to_lambda(d.word), p);
      if (d.sign < 0) via_dual = -via_dual;
      t.compare(via_dual, t5(m, n, p));
      if (n == 0) t.compare(via_dual, t4(m, p));
    }
  }
  return t.outcome();
}

Outcome functional_equation() {
  const Precision p(50);
  Tally series("double sum", -45);
  series.compare(evaluate_lambda(LambdaSpec({2, 1}, {-1, -1}), p), z({2, 1}, p) / 8);
  Tally functional("J residual", -35);
  const Rational x(3, 10);
  BigReal residual = evaluate_J(-x, p) + evaluate_J(x, p) - evaluate_J(x * x, p) / 4 -
                     evaluate_J(Rational(2) * x / (x + Rational(1)), p) +
                     evaluate_J(Rational(4) * x / ((x + Rational(1)) * (x + Rational(1))), p) / 8;
  functional.compare(residual, BigReal(p));
  const Outcome a = series.outcome();
  const Outcome b = functional.outcome();
  return {a.passed && b.passed, a.detail + "; " + b.detail};
}

Outcome dressed_zagier() {
  const Precision p(50);
  Tally t("sum", -40);
  BigReal fact(p);
  mpfr_fac_ui(fact.get(), 7, MPFR_RNDN);
  t.compare(z({2, 3, 1}, p) + z({3, 2, 1}, p) + z({3, 1, 2}, p), pow_int(pi(p), 6) / fact);
  return t.outcome();
}

Outcome reversal() {
  const Precision p(50);
  Tally depth2("depth-2 check", -40);
  depth2.compare(z({3, 2}, p) + z({2, 3}, p), z({3}, p) * z({2}, p) - z({5}, p));
  Tally depth3("depth-3 check", -35);
  const Identity id = reversal_reduction({3, 1, 2});
  depth3.compare(evaluate(id.lhs, p), evaluate(id.rhs, p));
  for (const auto& [product, c] : id.rhs.terms()) {
    for (const auto& f : product.factors()) {
      if (f.depth() >= 3) depth3.fail("term of depth 3 on the right");
    }
  }
  const Outcome a = depth2.outcome();
  const Outcome b = depth3.outcome();
  return {a.passed && b.passed, a.detail + "; " + b.detail + "; " + id.rhs.to_string()};
}

Outcome simplex_lock() {
  const Precision p(30);
  const long expected[] = {1, 2, 6, 26, 150, 1082};
  Tally t("values", -25);
  for (int n = 0; n <= 5; ++n) {
    if (delta_neg(n) != expected[n]) t.fail("recurrence value for n=" + std::to_string(n));
    t.compare(direct_nested_sum(LambdaSpec::delta({-n}), p), BigReal(expected[n], p));
  }
  return t.outcome();
}

Outcome property_suites(SelftestLevel level) {
  const bool full = level == SelftestLevel::Full;
  std::mt19937 rng(99);
  std::vector<std::string> failures;
  std::ostringstream detail;

  // Exact rational stuffle check over random bases in [2, 9].
  const int rational_cases = full ? 200 : 40;
  int rational_ok = 0;
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> depth(0, 3);
  auto random_bases = [&] {
    std::vector<Rational> v;
    const int k = depth(rng);
    for (int i = 0; i < k; ++i) {
      const int q = den(rng);
      std::uniform_int_distribution<int> num(2 * q, 9 * q);
      v.emplace_back(num(rng), q);
    }
    return v;
  };
  for (int i = 0; i < rational_cases; ++i) rational_ok += rational_stuffle_check(random_bases(), random_bases()) ? 1 : 0;
  if (rational_ok != rational_cases) failures.push_back("rational stuffle");
  detail << "rational stuffle " << rational_ok << "/" << rational_cases;

  // Shuffle multiplicity.
  int shuffle_ok = 0;
  const int shuffle_cases = full ? 50 : 10;
  for (int i = 0; i < shuffle_cases; ++i) {
    const Word a = random_word(rng, 5);
    const Word b = random_word(rng, 5);
    const WordSum s = shuffle_words(a, b);
    bool ok = s.total_multiplicity() == Rational(binomial(static_cast<long>(a.length() + b.length()),
                                                          static_cast<long>(a.length())));
    for (const auto& entry : s.terms()) ok = ok && entry.first.length() == a.length() + b.length();
    shuffle_ok += ok ? 1 : 0;
  }
  if (shuffle_ok != shuffle_cases) failures.push_back("shuffle multiplicity");
  detail << "; shuffle " << shuffle_ok << "/" << shuffle_cases;

  // Planted relations at 60 digits.
  const Precision p60(60);
  const int planted_cases = full ? 100 : 20;
  int planted_ok = 0;
  std::uniform_int_distribution<int> size(2, 5);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int i = 0; i < planted_cases; ++i) {
    const int n = size(rng);
    IntVector c(static_cast<std::size_t>(n));
    mpz_class g = 0;
    for (auto& e : c) {
      do {
        e = coef(rng);
      } while (e == 0);
      g = gcd(g, e);
    }
    for (auto& e : c) e /= g;
    std::vector<BigReal> x;
    BigReal partial(p60);
    for (int j = 0; j + 1 < n; ++j) {
      std::string text = "0.";
      for (int d = 0; d < 70; ++d) text += static_cast<char>('0' + digit(rng));
      x.push_back(BigReal::parse(text, p60));
      partial += x.back() * BigReal(c[static_cast<std::size_t>(j)], p60);
    }
    x.push_back(-partial / BigReal(c.back(), p60));
    IntVector want = c;
    if (want.front() < 0) {
      for (auto& e : want) e = -e;
    }
    const RelationResult r = lindep(x);
    planted_ok += r.found() && *r.coefficients == want ? 1 : 0;
  }
  if (planted_ok != planted_cases) failures.push_back("planted relations");
  detail << "; planted " << planted_ok << "/" << planted_cases;

  // Precision monotonicity: rendering at N digits agrees with the
  // N+10 digit evaluation rounded to N digits.
  const char* sources[] = {"z(3)", "z(2,1) - z(3)/3", "zp(2,2,1)", "Pi^2*log(2)", "z(-2,1)", "zp(3/2,2)"};
  int mono_ok = 0;
  int mono_cases = 0;
  for (const char* src : sources) {
    const ExprPtr e = parse_expression(src);
    for (int n : {15, 30, 45}) {
      ++mono_cases;
      const BigReal lo = std::get<BigReal>(eval_expression(*e, n));
      const BigReal hi = std::get<BigReal>(eval_expression(*e, n + 10));
      mono_ok += to_decimal_string(lo, n) == to_decimal_string(hi, n) ? 1 : 0;
    }
  }
  if (mono_ok != mono_cases) failures.push_back("precision monotonicity");
  detail << "; monotonicity " << mono_ok << "/" << mono_cases;

  // Numeric consistency of stuffle and shuffle products plus the corpus.
  const Precision p40(40);
  int numeric_ok = 0;
  int numeric_cases = 0;
  auto check = [&](const Identity& id) {
    ++numeric_cases;
    numeric_ok += within(evaluate(id.lhs, p40), evaluate(id.rhs, p40), -30) ? 1 : 0;
  };
  static const std::vector<Rational> base_pool{1, -1, 2, -2, Rational(3, 2), Rational(-3, 2), 3};
  std::uniform_int_distribution<std::size_t> pick(0, base_pool.size() - 1);
  std::uniform_int_distribution<int> exponent(1, 3);
  std::uniform_int_distribution<int> spec_depth(1, 2);
  auto random_spec = [&] {
    while (true) {
      std::vector<LambdaTerm> terms;
      const int k = spec_depth(rng);
      for (int i = 0; i < k; ++i) terms.push_back({exponent(rng), base_pool[pick(rng)]});
      LambdaSpec s(terms);
      if (check_convergence(s) && s.weight() <= 3) return s;
    }
  };
  const int product_cases = full ? 30 : 8;
  for (int i = 0; i < product_cases; ++i) {
    check(stuffle_identity(random_spec(), random_spec()));
    const Word a = random_word(rng, 4);
    Word b = random_word(rng, 3);
    if (a.length() + b.length() > 7) b = Word{2};
    check(shuffle_identity(a, b));
  }
  for (const auto& id : identity_corpus(full ? 6 : 4)) check(id);
  if (numeric_ok != numeric_cases) failures.push_back("numeric consistency");
  detail << "; identities " << numeric_ok << "/" << numeric_cases;

  if (!failures.empty()) {
    detail << "; failed:";
    for (const auto& f : failures) detail << " " << f;
  }
  return {failures.empty(), detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(SelftestLevel level,
                                            const std::function<void(const CriterionResult&)>& report) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "euler-z21", euler},
      {2, "ezface-pi6-over-z6", ezface_golden},
      {3, "relation-depth3",
       [] { return expect_relation("lindep([z(4,1,3), z(5,3), z(8), z(5)*z(3), z(3)^2*z(2)])", {36, 36, -71, 90, -18}); }},
      {4, "relation-zeta3-log2",
       [] { return expect_relation("lindep([z(3), Pi^2*log(2), zp(2,2,1), zp(2,3)])", {12, -1, -12, -12}); }},
      {5, "zagier-31n", zagier_check},
      {6, "z213-family", z213_family},
      {7, "duality", [level] { return duality(level); }},
      {8, "holder-invariance", holder_invariance},
      {9, "closed-forms", closed_forms},
      {10, "unit-euler-sums", unit_euler_sums},
      {11, "functional-equation", functional_equation},
      {12, "dressed-zagier", dressed_zagier},
      {13, "reversal-reduction", reversal},
      {14, "simplex-lock", simplex_lock},
      {15, "property-suites", [level] { return property_suites(level); }},
  };

  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_criterion(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %-24s (%.2f s)  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return head + r.detail;
}

}  // namespace polylog
