#include "polylog/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polylog/error.hpp"

namespace polylog {

namespace {

mpz_class dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a/b for b > 0, ties away from zero.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class twice = 2 * a + (sgn(a) >= 0 ? b : mpz_class(-b));
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  return q;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

class IntegralLll {
 public:
  explicit IntegralLll(IntMatrix basis)
      : b_(std::move(basis)), n_(b_.size()), d_(n_ + 1), lambda_(n_ + 1, IntVector(n_ + 1)) {}

  void run() {
    if (n_ == 0) return;
    d_[0] = 1;
    d_[1] = dot(b_[0], b_[0]);
    if (d_[1] == 0) throw DomainError("lll_reduce: zero basis vector");
    std::size_t k = 2;
    std::size_t k_max = 1;
    while (k <= n_) {
      if (k > k_max) {
        k_max = k;
        extend(k);
      }
      while (true) {
        reduce(k, k - 1);
        const mpz_class& l = lambda_[k][k - 1];
        if (4 * d_[k] * d_[k - 2] < 3 * d_[k - 1] * d_[k - 1] - 4 * l * l) {
          swap(k, k_max);
          if (k > 2) --k;
        } else {
          break;
        }
      }
      for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
      ++k;
    }
  }

  LllResult result() && {
    LllResult r;
    for (std::size_t i = 1; i <= n_; ++i) r.gram_schmidt_norms.emplace_back(d_[i], d_[i - 1]);
    r.basis = std::move(b_);
    return r;
  }

 private:
  IntVector& row(std::size_t k) { return b_[k - 1]; }

  void extend(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      mpz_class u = dot(row(k), row(j));
      for (std::size_t i = 1; i < j; ++i) u = exact_div(d_[i] * u - lambda_[k][i] * lambda_[j][i], d_[i - 1]);
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        if (u == 0) throw DomainError("lll_reduce: basis vectors are linearly dependent");
        d_[k] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    if (abs(2 * lambda_[k][l]) <= d_[l]) return;
    const mpz_class q = round_div(lambda_[k][l], d_[l]);
    IntVector& bk = row(k);
    const IntVector& bl = row(l);
    for (std::size_t c = 0; c < bk.size(); ++c) bk[c] -= q * bl[c];
    lambda_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t k_max) {
    std::swap(row(k), row(k - 1));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const mpz_class l = lambda_[k][k - 1];
    const mpz_class big = exact_div(d_[k - 2] * d_[k] + l * l, d_[k - 1]);
    for (std::size_t i = k + 1; i <= k_max; ++i) {
      const mpz_class t = lambda_[i][k];
      lambda_[i][k] = exact_div(d_[k] * lambda_[i][k - 1] - l * t, d_[k - 1]);
      lambda_[i][k - 1] = exact_div(big * t + l * lambda_[i][k], d_[k]);
    }
    d_[k - 1] = big;
  }

  IntMatrix b_;
  std::size_t n_;
  IntVector d_;
  IntMatrix lambda_;
};

}  // namespace

LllResult lll_reduce_detailed(const IntMatrix& basis) {
  for (const auto& r : basis) {
    if (r.size() != basis.front().size()) throw ArgumentError("lll_reduce: ragged basis");
  }
  IntegralLll lll(basis);
  lll.run();
  return std::move(lll).result();
}

IntMatrix lll_reduce(const IntMatrix& basis) { return lll_reduce_detailed(basis).basis; }

int lindep_scale_digits(const Precision& prec) { return prec.digits() - 10; }

RelationResult lindep(const std::vector<BigReal>& values) {
  if (values.size() < 2) throw ArgumentError("lindep needs at least two values");
  const Precision& prec = values.front().precision();
  for (const auto& v : values) {
    if (!(v.precision() == prec)) throw PrecisionError("lindep inputs carry different precisions");
  }
  if (prec.digits() < 30) throw PrecisionError("lindep needs at least 30 digits");

  const std::size_t n = values.size();
  const int scale_digits = lindep_scale_digits(prec);
  BigReal scale = pow_int(BigReal(10, prec), scale_digits);
  IntMatrix lattice(n, IntVector(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    lattice[i][i] = 1;
    BigReal scaled = values[i] * scale;
    mpfr_get_z(lattice[i][n].get_mpz_t(), scaled.get(), MPFR_RNDN);
  }
  const LllResult reduced = lll_reduce_detailed(lattice);

  const double log10_threshold = -scale_digits / 2.0;
  const double log10_norm_cap = scale_digits / (2.0 * static_cast<double>(n));
  RelationResult best;
  for (const auto& row : reduced.basis) {
    IntVector c(row.begin(), row.begin() + static_cast<long>(n));
    bool all_zero = true;
    for (const auto& e : c) all_zero = all_zero && e == 0;
    if (all_zero) continue;
    BigReal residual(prec);
    for (std::size_t i = 0; i < n; ++i) residual += values[i] * BigReal(c[i], prec);
    residual = residual.abs();
    if (!within(residual, BigReal(prec), log10_threshold)) continue;
    double norm_sq = 0.0;
    for (const auto& e : c) norm_sq += e.get_d() * e.get_d();
    const double norm = std::sqrt(norm_sq);
    if (std::log10(norm) > log10_norm_cap) continue;
    if (best.found() && !(norm < best.norm)) continue;
    for (const auto& e : c) {
      if (e == 0) continue;
      if (e < 0) {
        for (auto& x : c) x = -x;
      }
      break;
    }
    best.coefficients = std::move(c);
    best.residual = std::move(residual);
    best.norm = norm;
  }
  if (!best.found()) {
    double shortest = std::numeric_limits<double>::infinity();
    for (const auto& g : reduced.gram_schmidt_norms) shortest = std::min(shortest, std::sqrt(g.to_double()));
    best.exclusion_bound = shortest / std::sqrt(1.0 + static_cast<double>(n) / 4.0);
  }
  return best;
}

}  // namespace polylog
