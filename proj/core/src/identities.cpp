#include "polylog/identities.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include <json.hpp>

#include "polylog/error.hpp"

namespace polylog {

namespace {

Rational base_at(const std::vector<Rational>& v, std::size_t consumed) {
  return consumed == 0 ? Rational(1) : v[consumed - 1];
}

LambdaSpec mu_spec(const std::vector<Rational>& bases) { return LambdaSpec::mu(bases); }

void require_nonnegative(const std::vector<int>& s) {
  for (int v : s) {
    if (v < 0) throw ArgumentError("entries must be nonnegative integers");
  }
}

void require_positive(const std::vector<int>& s) {
  for (int v : s) {
    if (v < 1) throw ArgumentError("entries must be positive integers");
  }
}

int sign_of_parity(long n) { return n % 2 == 0 ? 1 : -1; }

// Polynomial in the regularized zeta(1), keyed by degree.
using Poly = std::map<int, LambdaSum>;

void poly_add(Poly& acc, const Poly& p, const Rational& scale) {
  for (const auto& [deg, sum] : p) {
    acc[deg] += sum * scale;
    if (acc[deg].empty()) acc.erase(deg);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [da, sa] : a) {
    for (const auto& [db, sb] : b) {
      out[da + db] += multiply(sa, sb);
      if (out[da + db].empty()) out.erase(da + db);
    }
  }
  return out;
}

class Regularizer {
 public:
  // zeta(1^m, v) = (1/m) [ T zeta(1^(m-1), v) - (other stuffle terms of zeta(1) zeta(1^(m-1), v)) ].
  const Poly& operator()(const std::vector<int>& z) {
    auto it = memo_.find(z);
    if (it != memo_.end()) return it->second;
    Poly result;
    std::size_t m = 0;
    while (m < z.size() && z[m] == 1) ++m;
    if (m == 0) {
      result[0] = LambdaSum(LambdaProduct(LambdaSpec::zeta(z)));
    } else {
      const std::vector<int> rest(z.begin() + 1, z.end());
      const Poly& lower = (*this)(rest);
      for (const auto& [deg, sum] : lower) result[deg + 1] += sum;
      for (const auto& merged : stuffle_set({1}, rest, {1}, std::vector<Rational>(rest.size(), 1))) {
        const std::vector<int> e = merged.exponents();
        if (e == z) continue;
        poly_add(result, (*this)(e), Rational(-1));
      }
      // Each of the m insertion points among the leading ones yields z itself.
      Poly scaled;
      poly_add(scaled, result, Rational(1, static_cast<long>(m)));
      result = std::move(scaled);
    }
    return memo_.emplace(z, std::move(result)).first->second;
  }

 private:
  std::map<std::vector<int>, Poly> memo_;
};

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = 1; part <= total; ++part) {
    prefix.push_back(part);
    compositions(total - part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> compositions_of(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions(total, prefix, out);
  return out;
}

}  // namespace

LambdaSum to_lambda_sum(const WordSum& words) {
  LambdaSum out;
  for (const auto& [w, c] : words.terms()) {
    out.add(LambdaProduct(word_to_lambda(w)), w.depth() % 2 == 0 ? c : -c);
  }
  return out;
}

std::vector<LambdaSpec> stuffle_set(const std::vector<int>& s, const std::vector<int>& t,
                                    const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (s.size() != a.size() || t.size() != b.size()) {
    throw ArgumentError("stuffle_set: exponent and base strings differ in length");
  }
  std::vector<LambdaSpec> out;
  std::vector<LambdaTerm> prefix;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t i, std::size_t j) {
    if (i == s.size() && j == t.size()) {
      out.emplace_back(prefix);
      return;
    }
    if (i < s.size()) {
      prefix.push_back({s[i], base_at(a, i + 1) * base_at(b, j)});
      grow(i + 1, j);
      prefix.pop_back();
    }
    if (j < t.size()) {
      prefix.push_back({t[j], base_at(a, i) * base_at(b, j + 1)});
      grow(i, j + 1);
      prefix.pop_back();
    }
    if (i < s.size() && j < t.size()) {
      prefix.push_back({s[i] + t[j], base_at(a, i + 1) * base_at(b, j + 1)});
      grow(i + 1, j + 1);
      prefix.pop_back();
    }
  };
  grow(0, 0);
  return out;
}

Identity stuffle_identity(const LambdaSpec& u, const LambdaSpec& v) {
  Identity id;
  id.lhs = LambdaSum(LambdaProduct(std::vector<LambdaSpec>{u, v}));
  for (auto& spec : stuffle_set(u.exponents(), v.exponents(), u.bases(), v.bases())) {
    id.rhs.add(LambdaProduct(std::move(spec)), Rational(1));
  }
  id.tag = "stuffle";
  return id;
}

bool rational_stuffle_check(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const auto f = [](const std::vector<Rational>& bases) {
    Rational prod(1);
    for (const auto& x : bases) {
      if (x == Rational(1)) throw DomainError("pole: base equal to 1");
      prod /= x - Rational(1);
    }
    return prod;
  };
  const Rational lhs = f(a) * f(b);
  Rational rhs;
  for (const auto& spec : stuffle_set(std::vector<int>(a.size(), 0), std::vector<int>(b.size(), 0), a, b)) {
    rhs += f(spec.bases());
  }
  return lhs == rhs;
}

WordSum shuffle_words(const Word& w1, const Word& w2) {
  WordSum out;
  std::vector<Rational> prefix;
  prefix.reserve(w1.length() + w2.length());
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t i, std::size_t j) {
    if (i == w1.length() && j == w2.length()) {
      out.add(Word(prefix), Rational(1));
      return;
    }
    if (i < w1.length()) {
      prefix.push_back(w1.forms[i]);
      grow(i + 1, j);
      prefix.pop_back();
    }
    if (j < w2.length()) {
      prefix.push_back(w2.forms[j]);
      grow(i, j + 1);
      prefix.pop_back();
    }
  };
  grow(0, 0);
  return out;
}

Identity shuffle_identity(const Word& w1, const Word& w2) {
  Identity id;
  const int sign = sign_of_parity(static_cast<long>(w1.depth() + w2.depth()));
  id.lhs = LambdaSum(LambdaProduct(std::vector<LambdaSpec>{word_to_lambda(w1), word_to_lambda(w2)}),
                     Rational(sign));
  id.rhs = to_lambda_sum(shuffle_words(w1, w2));
  id.tag = "shuffle";
  return id;
}

Identity duality_identity(const Word& w) {
  const DualWord d = dual_word(w);
  Identity id;
  id.lhs = as_sum(word_to_lambda(w));
  id.rhs = as_sum(word_to_lambda(d.word), Rational(d.sign));
  id.tag = "duality";
  return id;
}

std::string CyclotomicExpansion::to_string() const {
  std::string out = lhs.to_string() + " = " + scale.to_string() + "*(";
  const auto& terms = lhs.terms();
  for (std::size_t d = 0; d < dressings.size(); ++d) {
    if (d > 0) out += " + ";
    out += "L[";
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(terms[j].exponent);
    }
    out += "|";
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j > 0) out += ",";
      const int i = dressings[d][j];
      if (i != 0) out += "w^" + std::to_string(i) + "*";
      out += "b" + std::to_string(j + 1);
    }
    out += "]";
  }
  out += ")";
  return out;
}

CyclotomicExpansion cyclotomic_expand(const LambdaSpec& roots, int n) {
  if (n < 1) throw ArgumentError("cyclotomic order must be at least 1");
  for (const auto& t : roots.terms()) {
    if (t.exponent < 1) throw ArgumentError("cyclotomic expansion needs positive exponents");
  }
  CyclotomicExpansion e;
  e.order = n;
  std::vector<LambdaTerm> powered = roots.terms();
  for (auto& t : powered) t.base = t.base.pow(n);
  e.lhs = LambdaSpec(std::move(powered));
  const int k = static_cast<int>(roots.depth());
  e.scale = Rational(n).pow(roots.weight() - k);

  std::vector<int> current(static_cast<std::size_t>(k), 0);
  while (true) {
    e.dressings.push_back(current);
    int j = k - 1;
    while (j >= 0 && current[static_cast<std::size_t>(j)] == n - 1) {
      current[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++current[static_cast<std::size_t>(j)];
  }

  if (n <= 2) {
    Identity id;
    id.lhs = as_sum(e.lhs);
    for (const auto& d : e.dressings) {
      std::vector<LambdaTerm> dressed = roots.terms();
      for (std::size_t j = 0; j < dressed.size(); ++j) {
        if (d[j] == 1) dressed[j].base = -dressed[j].base;
      }
      id.rhs.add(LambdaProduct(LambdaSpec(std::move(dressed))), e.scale);
    }
    id.tag = "cyclotomic";
    e.identity = std::move(id);
  }
  return e;
}

Identity alternating_to_mu(const std::vector<int>& s) {
  require_nonnegative(s);
  const std::size_t k = s.size();
  std::vector<int> exps;
  for (std::size_t j = k; j-- > 0;) exps.push_back(1 + s[j]);
  Identity id;
  id.lhs = as_sum(LambdaSpec::uniform(exps, -1));

  int total = 0;
  for (int v : s) total += v;
  for (unsigned long mask = 0; mask < (1UL << total); ++mask) {
    std::vector<Rational> bases;
    int sign = 1;
    int bit = 0;
    for (std::size_t j = 0; j < k; ++j) {
      bases.emplace_back(-1);
      for (int i = 0; i < s[j]; ++i, ++bit) {
        const bool negative = (mask >> bit) & 1UL;
        bases.emplace_back(negative ? -1 : 1);
        if (negative) sign = -sign;
      }
    }
    id.rhs.add(LambdaProduct(mu_spec(bases)), Rational(sign));
  }
  id.tag = "alternating-to-mu";
  return id;
}

Identity mu_to_compositions(const std::vector<int>& s) {
  require_nonnegative(s);
  const std::size_t k = s.size();
  std::vector<Rational> bases;
  for (std::size_t j = k; j-- > 0;) {
    bases.emplace_back(-1);
    bases.insert(bases.end(), static_cast<std::size_t>(s[j]), Rational(1));
  }
  Identity id;
  id.lhs = as_sum(mu_spec(bases));

  std::vector<std::vector<std::vector<int>>> choices;
  for (int v : s) choices.push_back(compositions_of(v + 1));
  std::vector<int> exps;
  std::function<void(std::size_t)> grow = [&](std::size_t j) {
    if (j == k) {
      id.rhs.add(LambdaProduct(LambdaSpec::uniform(exps, -1)), Rational(1));
      return;
    }
    for (const auto& c : choices[j]) {
      const std::size_t mark = exps.size();
      exps.insert(exps.end(), c.begin(), c.end());
      grow(j + 1);
      exps.resize(mark);
    }
  };
  grow(0);
  id.tag = "mu-to-compositions";
  return id;
}

Identity delta_mu_dual(const std::vector<int>& s) {
  require_positive(s);
  std::vector<Rational> bases;
  for (std::size_t j = s.size(); j-- > 0;) {
    bases.emplace_back(-1);
    bases.insert(bases.end(), static_cast<std::size_t>(s[j] - 1), Rational(1));
  }
  Identity id;
  id.lhs = as_sum(LambdaSpec::delta(s));
  id.rhs = as_sum(mu_spec(bases), Rational(sign_of_parity(static_cast<long>(s.size()))));
  id.tag = "delta-mu-duality";
  return id;
}

Identity delta_mu_dual_symmetric(const std::vector<int>& s, const std::vector<int>& r) {
  if (s.size() != r.size()) throw ArgumentError("delta_mu_dual_symmetric: length mismatch");
  require_nonnegative(s);
  require_nonnegative(r);
  std::vector<int> exps;
  long r_total = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    exps.push_back(s[j] + 2);
    exps.insert(exps.end(), static_cast<std::size_t>(r[j]), 1);
    r_total += r[j];
  }
  std::vector<Rational> bases;
  for (std::size_t j = s.size(); j-- > 0;) {
    bases.insert(bases.end(), static_cast<std::size_t>(r[j] + 1), Rational(-1));
    bases.insert(bases.end(), static_cast<std::size_t>(s[j] + 1), Rational(1));
  }
  Identity id;
  id.lhs = as_sum(LambdaSpec::delta(exps));
  id.rhs = as_sum(mu_spec(bases),
                  Rational(sign_of_parity(r_total + static_cast<long>(s.size()))));
  id.tag = "delta-mu-duality";
  return id;
}

LambdaSum weak_chain_expand(const std::vector<int>& s) {
  LambdaSum out;
  if (s.empty()) {
    out.add(LambdaProduct(), Rational(1));
    return out;
  }
  const std::size_t gaps = s.size() - 1;
  for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
    std::vector<int> merged{s[0]};
    for (std::size_t g = 0; g < gaps; ++g) {
      if ((mask >> g) & 1UL) {
        merged.back() += s[g + 1];
      } else {
        merged.push_back(s[g + 1]);
      }
    }
    std::reverse(merged.begin(), merged.end());
    out.add(LambdaProduct(LambdaSpec::zeta(merged)), Rational(1));
  }
  return out;
}

Identity reversal_reduction(const std::vector<int>& s) {
  require_positive(s);
  if (s.empty() || s.front() < 2 || s.back() < 2) {
    throw DivergenceError("reversal reduction needs s_1 >= 2 and s_k >= 2");
  }
  const std::size_t k = s.size();
  std::vector<int> rev(s.rbegin(), s.rend());

  Regularizer regularize;
  // Inclusion-exclusion over the relaxed constraints n_j <= n_{j+1}, j in T.
  Poly total;
  for (unsigned long mask = 0; mask < (1UL << (k - 1)); ++mask) {
    Poly product;
    product[0] = LambdaSum(LambdaProduct(), Rational(1));
    std::size_t start = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const bool linked = j + 1 < k && ((mask >> j) & 1UL);
      if (linked) continue;
      const std::vector<int> run(s.begin() + static_cast<long>(start), s.begin() + static_cast<long>(j + 1));
      Poly run_poly;
      const LambdaSum chain = weak_chain_expand(run);
      for (const auto& [body, c] : chain.terms()) {
        poly_add(run_poly, regularize(body.factors().front().exponents()), c);
      }
      product = poly_mul(product, run_poly);
      start = j + 1;
    }
    poly_add(total, product, Rational(sign_of_parity(std::popcount(mask))));
  }
  for (const auto& [deg, sum] : total) {
    if (deg != 0 && !sum.empty()) throw Error("reversal reduction: regularization did not cancel");
  }

  Identity id;
  id.lhs = as_sum(LambdaSpec::zeta(s));
  id.lhs.add(LambdaProduct(LambdaSpec::zeta(rev)), Rational(sign_of_parity(static_cast<long>(k))));
  id.rhs = total.count(0) != 0 ? total[0] : LambdaSum();
  id.rhs.add(LambdaProduct(LambdaSpec::zeta(rev)), Rational(-sign_of_parity(static_cast<long>(k - 1))));
  id.tag = "reversal-reduction";
  return id;
}

Rational bernoulli(int n) {
  if (n < 0) throw ArgumentError("bernoulli: n must be nonnegative");
  // Akiyama-Tanigawa; it produces B_1 = +1/2.
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      const auto uj = static_cast<std::size_t>(j);
      a[uj - 1] = Rational(j) * (a[uj - 1] - a[uj]);
    }
  }
  return n == 1 ? -a[0] : a[0];
}

std::vector<Identity> identity_corpus(int max_weight) {
  if (max_weight < 2) throw ArgumentError("identity corpus needs weight >= 2");
  std::vector<Identity> out;

  std::vector<std::vector<int>> mzv;
  std::vector<std::vector<int>> positive;
  for (int w = 1; w <= max_weight; ++w) {
    for (auto& c : compositions_of(w)) {
      positive.push_back(c);
      if (c.front() >= 2) mzv.push_back(c);
    }
  }

  for (const auto& s : mzv) {
    const Word w = lambda_to_word(LambdaSpec::zeta(s));
    const DualWord d = dual_word(w);
    if (w < d.word) out.push_back(duality_identity(w));
  }
  for (std::size_t i = 0; i < mzv.size(); ++i) {
    for (std::size_t j = i; j < mzv.size(); ++j) {
      const auto& u = mzv[i];
      const auto& v = mzv[j];
      if (u.size() > 2 || v.size() > 2) continue;
      const int weight = LambdaSpec::zeta(u).weight() + LambdaSpec::zeta(v).weight();
      if (weight > max_weight) continue;
      out.push_back(stuffle_identity(LambdaSpec::zeta(u), LambdaSpec::zeta(v)));
      out.push_back(shuffle_identity(lambda_to_word(LambdaSpec::zeta(u)), lambda_to_word(LambdaSpec::zeta(v))));
    }
  }
  for (const auto& s : positive) {
    if (s.size() <= 3) out.push_back(delta_mu_dual(s));
  }
  for (const auto& c : positive) {
    if (c.size() > 3) continue;
    std::vector<int> shifted;
    for (int v : c) shifted.push_back(v - 1);
    out.push_back(alternating_to_mu(shifted));
    out.push_back(mu_to_compositions(shifted));
  }
  for (const auto& s : mzv) {
    if (s.size() <= 2) out.push_back(*cyclotomic_expand(LambdaSpec::zeta(s), 2).identity);
  }
  for (const auto& s : mzv) {
    if (s.size() >= 2 && s.size() <= 3 && s.back() >= 2) out.push_back(reversal_reduction(s));
  }
  return out;
}

std::string export_json_lines(const std::vector<Identity>& identities) {
  std::string out;
  for (const auto& id : identities) {
    nlohmann::json j;
    j["lhs"] = id.lhs.to_string();
    j["rhs"] = id.rhs.to_string();
    j["tag"] = id.tag;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace polylog
