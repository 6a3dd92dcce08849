#include "polylog/closed_forms.hpp"

#include <cmath>
#include <string>

#include "polylog/error.hpp"
#include "polylog/identities.hpp"

namespace polylog {

namespace {

BigReal factorial(long n, const Precision& prec) {
  BigReal out(prec);
  mpfr_fac_ui(out.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

int as_int(const Rational& r, const char* what) {
  if (!r.is_integer() || r.abs() > Rational(100000)) {
    throw ArgumentError(std::string(what) + " must be a moderate integer");
  }
  return static_cast<int>(r.numerator().get_si());
}

// zeta({4}^m) = 4^m zeta({3,1}^m).
BigReal zeta_fours(int m, const Precision& prec) { return zagier(m, prec) * pow_int(BigReal(4, prec), m); }

}  // namespace

ClosedFormConstants::ClosedFormConstants(const Precision& prec) : prec_(prec), ln2_(ln(Rational(2), prec)) {}

const BigReal& ClosedFormConstants::A(int r) {
  require(r >= 1, "A_r needs r >= 1");
  auto it = a_.find(r);
  if (it != a_.end()) return it->second;
  // sum 2^-k k^-r; the tail after k is below 2^-k.
  BigReal sum(prec_);
  BigReal half_power(1, prec_);
  BigReal term(prec_);
  const long limit = static_cast<long>(std::ceil(prec_.working_digits() * 3.33)) + 10;
  for (long k = 1; k <= limit; ++k) {
    half_power /= 2;
    mpfr_set(term.get(), half_power.get(), MPFR_RNDN);
    for (int i = 0; i < r; ++i) mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    sum += term;
  }
  return a_.emplace(r, std::move(sum)).first->second;
}

const BigReal& ClosedFormConstants::P(int r) {
  require(r >= 0, "P_r needs r >= 0");
  auto it = p_.find(r);
  if (it != p_.end()) return it->second;
  BigReal v = pow_int(ln2_, r) / factorial(r, prec_);
  return p_.emplace(r, std::move(v)).first->second;
}

BigReal ClosedFormConstants::zeta(int r) {
  if (r == 1) throw DivergenceError("zeta(1) diverges");
  require(r >= 2, "zeta(r) needs r >= 2");
  BigReal v(prec_);
  mpfr_zeta_ui(v.get(), static_cast<unsigned long>(r), MPFR_RNDN);
  return v;
}

const BigReal& ClosedFormConstants::Z(int r) {
  auto it = z_.find(r);
  if (it != z_.end()) return it->second;
  BigReal v = zeta(r);
  if (r % 2 != 0) v = -v;
  return z_.emplace(r, std::move(v)).first->second;
}

BigReal zagier(int n, const Precision& prec) {
  require(n >= 0, "zagier(n) needs n >= 0");
  return pow_int(pi(prec), 4L * n) * 2 / factorial(4L * n + 2, prec);
}

BigReal z213(int n, const Precision& prec) {
  require(n >= 0, "z213(n) needs n >= 0");
  ClosedFormConstants c(prec);
  BigReal total(prec);
  for (int k = 0; k <= n; ++k) {
    BigReal inner = c.zeta(4 * k + 2) * (4L * k + 1);
    for (int j = 1; j <= k; ++j) inner -= c.zeta(4 * j - 1) * c.zeta(4 * k - 4 * j + 3) * 4;
    BigReal term = zeta_fours(n - k, prec) * inner;
    if (k % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total / pow_int(BigReal(4, prec), n);
}

BigReal mu_power(const Rational& p, int n, const Precision& prec) {
  require(p > Rational(1), "mu_power needs p > 1");
  require(n >= 0, "mu_power needs n >= 0");
  const Rational q = p / (p - Rational(1));
  return pow_int(ln(q, prec), n) / factorial(n, prec);
}

BigReal t4(int m, const Precision& prec) {
  require(m >= 1, "t4(m) needs m >= 1");
  ClosedFormConstants c(prec);
  BigReal sum(prec);
  for (int k = 0; k <= m; ++k) sum += c.A(k + 1) * c.P(m - k);
  if (m % 2 == 0) sum = -sum;
  return sum - c.Z(m + 1);
}

BigReal t5(int m, int n, const Precision& prec) {
  require(m >= 1 && n >= 0, "t5(m, n) needs m >= 1 and n >= 0");
  ClosedFormConstants c(prec);
  BigReal first(prec);
  for (int k = 0; k <= m; ++k) {
    first += c.A(k + n + 1) * c.P(m - k) * BigReal(binomial(n + k, n), prec);
  }
  if (m % 2 == 0) first = -first;
  BigReal second(prec);
  for (int k = 0; k <= n; ++k) {
    second += c.Z(k + m + 1) * c.P(n - k) * BigReal(binomial(m + k, m), prec);
  }
  if (n % 2 == 0) second = -second;
  return first + second;
}

mpz_class delta_neg(int n) {
  require(n >= 0, "delta_neg(n) needs n >= 0");
  std::vector<mpz_class> d{1};
  for (int m = 1; m <= n; ++m) {
    mpz_class v = 1;
    for (int j = 0; j < m; ++j) v += binomial(m, j) * d[static_cast<std::size_t>(j)];
    d.push_back(v);
  }
  return d[static_cast<std::size_t>(n)];
}

Rational delta_one_neg(int n) {
  require(n >= 1, "delta_one_neg(n) needs n >= 1");
  Rational total;
  for (int v = 0; v <= n; ++v) {
    total += Rational(mpz_class(binomial(n, v) * delta_neg(v))) * bernoulli(n - v) / Rational(v + 1);
  }
  return total;
}

Rational zero_string(const std::vector<Rational>& bases) {
  Rational prod(1);
  for (const auto& b : bases) {
    if (b == Rational(1)) throw DomainError("zero_string: base equal to 1");
    prod /= b - Rational(1);
  }
  return prod;
}

BigReal li2_half(const Precision& prec) {
  const BigReal p = pi(prec);
  const BigReal l = ln(Rational(2), prec);
  return p * p / 12 - l * l / 2;
}

BigReal zeta_li_log(int n, const Precision& prec) {
  require(n >= 0, "zeta_li_log(n) needs n >= 0");
  ClosedFormConstants c(prec);
  BigReal v = c.zeta(n + 2);
  for (int r = 1; r <= n + 2; ++r) v -= c.A(r) * c.P(n + 2 - r);
  return v;
}

BigReal delta_odd(int n, const Precision& prec) {
  require(n >= 1, "delta_odd(n) needs n >= 1");
  ClosedFormConstants c(prec);
  BigReal sum(prec);
  for (int j = 1; j <= 2 * n - 1; ++j) {
    BigReal term = c.A(j) * c.A(2 * n - j);
    if (j % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum / 2;
}

BigReal delta_12(const Precision& prec) {
  ClosedFormConstants c(prec);
  const BigReal& a1 = c.A(1);
  return c.A(2) * a1 * BigReal(Rational(5, 7), prec) - c.A(3) * BigReal(Rational(2, 7), prec) +
         pow_int(a1, 3) * BigReal(Rational(5, 21), prec);
}

BigReal closed_form(std::string_view id, const std::vector<Rational>& params, const Precision& prec) {
  const auto arity = [&](std::size_t n) {
    require(params.size() == n, std::string(id) + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (id == "zagier") {
    arity(1);
    return zagier(as_int(params[0], "n"), prec);
  }
  if (id == "z213") {
    arity(1);
    return z213(as_int(params[0], "n"), prec);
  }
  if (id == "mu_power") {
    arity(2);
    return mu_power(params[0], as_int(params[1], "n"), prec);
  }
  if (id == "t4") {
    arity(1);
    return t4(as_int(params[0], "m"), prec);
  }
  if (id == "t5") {
    arity(2);
    return t5(as_int(params[0], "m"), as_int(params[1], "n"), prec);
  }
  if (id == "delta_neg") {
    arity(1);
    return BigReal(delta_neg(as_int(params[0], "n")), prec);
  }
  if (id == "delta_one_neg") {
    arity(1);
    return BigReal(delta_one_neg(as_int(params[0], "n")), prec);
  }
  if (id == "zero_string") return BigReal(zero_string(params), prec);
  if (id == "li2_half") {
    arity(0);
    return li2_half(prec);
  }
  if (id == "zeta_li_log") {
    arity(1);
    return zeta_li_log(as_int(params[0], "n"), prec);
  }
  if (id == "delta_odd") {
    arity(1);
    return delta_odd(as_int(params[0], "n"), prec);
  }
  if (id == "delta_12") {
    arity(0);
    return delta_12(prec);
  }
  throw ArgumentError("unknown closed form '" + std::string(id) + "'");
}

}  // namespace polylog
