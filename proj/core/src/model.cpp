#include "polylog/model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "polylog/error.hpp"

namespace polylog {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& items, F&& render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += render(items[i]);
  }
  return out;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    parts.push_back(s.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

LambdaSpec::LambdaSpec(const std::vector<int>& exponents, const std::vector<Rational>& bases) {
  if (exponents.size() != bases.size()) {
    throw ArgumentError("exponent and base strings differ in length");
  }
  terms_.reserve(exponents.size());
  for (std::size_t j = 0; j < exponents.size(); ++j) terms_.push_back({exponents[j], bases[j]});
}

LambdaSpec LambdaSpec::uniform(const std::vector<int>& exponents, const Rational& base) {
  return LambdaSpec(exponents, std::vector<Rational>(exponents.size(), base));
}

LambdaSpec LambdaSpec::mu(const std::vector<Rational>& bases) {
  return LambdaSpec(std::vector<int>(bases.size(), 1), bases);
}

int LambdaSpec::weight() const {
  return std::accumulate(terms_.begin(), terms_.end(), 0,
                         [](int acc, const LambdaTerm& t) { return acc + t.exponent; });
}

std::vector<int> LambdaSpec::exponents() const {
  std::vector<int> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

std::vector<Rational> LambdaSpec::bases() const {
  std::vector<Rational> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.base);
  return out;
}

Rational LambdaSpec::min_abs_base() const {
  if (terms_.empty()) return 0;
  Rational m = terms_.front().base.abs();
  for (const auto& t : terms_) m = std::min(m, t.base.abs());
  return m;
}

std::string LambdaSpec::to_string() const {
  return "L[" + join(exponents(), [](int s) { return std::to_string(s); }) + "|" +
         join(bases(), [](const Rational& b) { return b.to_string(); }) + "]";
}

LambdaSpec LambdaSpec::parse(std::string_view text) {
  const auto bad = [&] { return ArgumentError("malformed lambda spec: '" + std::string(text) + "'"); };
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s(compact);
  if (s.size() < 4 || s.substr(0, 2) != "L[" || s.back() != ']') throw bad();
  s = s.substr(2, s.size() - 3);
  const auto bar = s.find('|');
  if (bar == std::string_view::npos) throw bad();
  const auto exps = split_commas(s.substr(0, bar));
  const auto bases = split_commas(s.substr(bar + 1));
  if (exps.size() != bases.size()) throw bad();
  std::vector<LambdaTerm> terms;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    const Rational e = Rational::parse(exps[j]);
    if (!e.is_integer()) throw bad();
    terms.push_back({static_cast<int>(e.numerator().get_si()), Rational::parse(bases[j])});
  }
  return LambdaSpec(std::move(terms));
}

std::strong_ordering operator<=>(const LambdaSpec& a, const LambdaSpec& b) {
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  for (std::size_t j = 0; j < a.depth(); ++j) {
    if (auto c = a.terms_[j].exponent <=> b.terms_[j].exponent; c != 0) return c;
  }
  for (std::size_t j = 0; j < a.depth(); ++j) {
    if (auto c = a.terms_[j].base <=> b.terms_[j].base; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ConvergenceReport check_convergence(const LambdaSpec& spec) {
  if (spec.empty()) return {true, "empty string"};
  bool all_positive = true;
  bool all_unit_or_more = true;
  bool all_beyond_unit = true;
  for (const auto& t : spec.terms()) {
    const Rational m = t.base.abs();
    if (t.exponent < 1) all_positive = false;
    if (m < 1) all_unit_or_more = false;
    if (m <= 1) all_beyond_unit = false;
  }
  if (all_beyond_unit) return {true, "all |b_j| > 1: geometric convergence"};
  if (!all_unit_or_more) return {false, "some |b_j| < 1"};
  if (!all_positive) return {false, "non-positive exponent with some |b_j| = 1"};
  const auto& first = spec.terms().front();
  if (first.exponent == 1 && first.base == 1) {
    return {false, "leading (s_1, b_1) = (1, 1): harmonic divergence"};
  }
  return {true, "all s_j >= 1, |b_j| >= 1 and (b_1, s_1) != (1, 1)"};
}

void MzvString::validate() const {
  for (int e : entries) {
    if (e == 0) throw ArgumentError("z arguments must be non-zero integers");
  }
}

int MzvString::weight() const {
  return std::accumulate(entries.begin(), entries.end(), 0,
                         [](int acc, int e) { return acc + (e < 0 ? -e : e); });
}

LambdaSpec lambda_from_z_string(const MzvString& z) {
  z.validate();
  if (!z.convergent()) {
    throw DivergenceError("z(1,...) diverges: leading argument 1 is unsigned");
  }
  std::vector<LambdaTerm> terms;
  terms.reserve(z.entries.size());
  int running = 1;
  for (int e : z.entries) {
    running *= e < 0 ? -1 : 1;
    terms.push_back({e < 0 ? -e : e, Rational(running)});
  }
  return LambdaSpec(std::move(terms));
}

std::size_t Word::depth() const {
  return static_cast<std::size_t>(
      std::count_if(forms.begin(), forms.end(), [](const Rational& a) { return !a.is_zero(); }));
}

bool Word::convergent() const {
  if (forms.empty()) return true;
  return !forms.back().is_zero() && forms.front() != Rational(1);
}

std::string Word::to_string() const {
  return "W[" + join(forms, [](const Rational& a) { return a.to_string(); }) + "]";
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.forms.size() <=> b.forms.size(); c != 0) return c;
  for (std::size_t r = 0; r < a.forms.size(); ++r) {
    if (auto c = a.forms[r] <=> b.forms[r]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Word lambda_to_word(const LambdaSpec& spec) {
  Word w;
  for (const auto& t : spec.terms()) {
    if (t.exponent < 1) {
      throw UnsupportedError("iterated-integral words need positive exponents: " + spec.to_string());
    }
    if (t.base.is_zero()) throw DomainError("zero base in " + spec.to_string());
    w.forms.insert(w.forms.end(), static_cast<std::size_t>(t.exponent - 1), Rational(0));
    w.forms.push_back(t.base);
  }
  return w;
}

LambdaSpec word_to_lambda(const Word& w) {
  if (!w.forms.empty() && w.forms.back().is_zero()) {
    throw DivergenceError("word " + w.to_string() + " ends in omega_0");
  }
  std::vector<LambdaTerm> terms;
  int run = 0;
  for (const auto& a : w.forms) {
    ++run;
    if (!a.is_zero()) {
      terms.push_back({run, a});
      run = 0;
    }
  }
  return LambdaSpec(std::move(terms));
}

DualWord dual_word(const Word& w) {
  if (!w.forms.empty() && w.forms.back().is_zero()) {
    throw DivergenceError("word " + w.to_string() + " ends in omega_0");
  }
  if (!w.forms.empty() && w.forms.front() == Rational(1)) {
    throw DivergenceError("dual of " + w.to_string() + " diverges: first form is omega_1");
  }
  DualWord d;
  d.word.forms.reserve(w.forms.size());
  for (auto it = w.forms.rbegin(); it != w.forms.rend(); ++it) d.word.forms.push_back(Rational(1) - *it);
  // integral(w) = (-1)^s integral(dual), and lambda = (-1)^depth integral.
  const std::size_t parity = w.length() + w.depth() + d.word.depth();
  d.sign = parity % 2 == 0 ? 1 : -1;
  return d;
}

std::vector<int> mzv_dual_string(const std::vector<int>& s) {
  if (s.empty()) return {};
  for (int e : s) {
    if (e < 1) throw ArgumentError("MZV arguments must be positive integers");
  }
  if (s.front() < 2) throw DivergenceError("MZV string must start with an argument >= 2");
  // Blocks (a_i + 2, {1}^r_i).
  std::vector<std::pair<int, int>> blocks;
  for (int e : s) {
    if (e >= 2) {
      blocks.emplace_back(e - 2, 0);
    } else {
      ++blocks.back().second;
    }
  }
  std::vector<int> out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    out.push_back(it->second + 2);
    out.insert(out.end(), static_cast<std::size_t>(it->first), 1);
  }
  return out;
}

GoncharovArgs to_goncharov(const LambdaSpec& spec) {
  GoncharovArgs g;
  Rational previous(1);
  for (const auto& t : spec.terms()) {
    if (t.base.is_zero()) throw DomainError("zero base in " + spec.to_string());
    g.exponents.push_back(t.exponent);
    g.arguments.push_back(previous / t.base);
    previous = t.base;
  }
  return g;
}

LambdaSpec from_goncharov(const GoncharovArgs& args) {
  if (args.exponents.size() != args.arguments.size()) {
    throw ArgumentError("exponent and argument strings differ in length");
  }
  std::vector<LambdaTerm> terms;
  Rational running(1);
  for (std::size_t j = 0; j < args.exponents.size(); ++j) {
    if (args.arguments[j].is_zero()) throw DomainError("zero Goncharov argument");
    running /= args.arguments[j];
    terms.push_back({args.exponents[j], running});
  }
  return LambdaSpec(std::move(terms));
}

}  // namespace polylog
