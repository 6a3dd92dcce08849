#include <doctest.h>

#include <cmath>
#include <random>

#include "polylog/error.hpp"
#include "polylog/relations.hpp"

using namespace polylog;

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RMatrix to_rational(const IntMatrix& m) {
  RMatrix out;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& x : row) r.emplace_back(x);
    out.push_back(r);
  }
  return out;
}

// Classical Gram-Schmidt in exact arithmetic: returns b* and mu.
std::pair<RMatrix, RMatrix> gram_schmidt(const RMatrix& b) {
  const std::size_t n = b.size();
  RMatrix star(n);
  RMatrix mu(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    star[i] = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = dot(b[i], star[j]) / dot(star[j], star[j]);
      for (std::size_t c = 0; c < b[i].size(); ++c) star[i][c] -= mu[i][j] * star[j][c];
    }
  }
  return {star, mu};
}

Rational determinant(RMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<BigReal> values(const std::vector<Rational>& xs, const Precision& p) {
  std::vector<BigReal> out;
  for (const auto& x : xs) out.emplace_back(x, p);
  return out;
}

}  // namespace

TEST_CASE("LLL leaves a reduced basis alone") {
  const IntMatrix id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(lll_reduce(id) == id);
  CHECK_THROWS_AS(lll_reduce({{1, 0}, {1}}), ArgumentError);
  CHECK_THROWS_AS(lll_reduce({{1, 2}, {2, 4}}), DomainError);
}

TEST_CASE("LLL output satisfies size reduction and the Lovasz condition") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-60, 60);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    IntMatrix m(n, IntVector(n + 1));
    for (auto& row : m) {
      for (auto& x : row) x = d(rng);
    }
    // Skip the rare dependent draw.
    const auto [star0, mu0] = gram_schmidt(to_rational(m));
    bool independent = true;
    for (const auto& v : star0) independent = independent && !dot(v, v).is_zero();
    if (!independent) continue;

    const LllResult r = lll_reduce_detailed(m);
    const auto [star, mu] = gram_schmidt(to_rational(r.basis));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(r.gram_schmidt_norms[i] == dot(star[i], star[i]));
      for (std::size_t j = 0; j < i; ++j) CHECK(mu[i][j].abs() <= Rational(1, 2));
      if (i > 0) {
        const Rational lhs = dot(star[i], star[i]);
        const Rational rhs = (Rational(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * dot(star[i - 1], star[i - 1]);
        CHECK(lhs >= rhs);
      }
    }
    // Same lattice: Gram determinants agree.
    auto gram = [](const RMatrix& b) {
      RMatrix g(b.size(), std::vector<Rational>(b.size()));
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) g[i][j] = dot(b[i], b[j]);
      }
      return g;
    };
    CHECK(determinant(gram(to_rational(m))) == determinant(gram(to_rational(r.basis))));
  }
}

TEST_CASE("LLL finds a short vector in two dimensions") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-200, 200);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = {{d(rng), d(rng)}, {d(rng), d(rng)}};
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0) continue;
    const IntMatrix r = lll_reduce(m);
    const mpz_class first = r[0][0] * r[0][0] + r[0][1] * r[0][1];
    // Brute-force shortest vector over small coefficients.
    mpz_class best = first;
    for (long a = -60; a <= 60; ++a) {
      for (long b = -60; b <= 60; ++b) {
        if (a == 0 && b == 0) continue;
        const mpz_class x = a * m[0][0] + b * m[1][0];
        const mpz_class y = a * m[0][1] + b * m[1][1];
        const mpz_class n2 = x * x + y * y;
        if (n2 < best) best = n2;
      }
    }
    CHECK(first <= 2 * best);
  }
}

TEST_CASE("lindep on rational inputs") {
  const Precision p(40);
  const RelationResult half = lindep(values({Rational(1), Rational(1, 2)}, p));
  REQUIRE(half.found());
  CHECK(*half.coefficients == IntVector{1, -2});
  const RelationResult third = lindep(values({Rational(1), Rational(1, 3)}, p));
  REQUIRE(third.found());
  CHECK(*third.coefficients == IntVector{1, -3});
  CHECK(third.norm == doctest::Approx(std::sqrt(10.0)));
  const RelationResult neg = lindep(values({Rational(-5, 7), Rational(1, 3)}, p));
  REQUIRE(neg.found());
  CHECK(*neg.coefficients == IntVector{7, 15});
}

TEST_CASE("lindep recovers planted relations") {
  const Precision p(60);
  const BigReal pi_v = pi(p);
  const BigReal l2 = ln(Rational(2), p);
  const BigReal l3 = ln(Rational(3), p);
  const BigReal x = pi_v * 3 - l2 * 5 + l3 * 7;
  const RelationResult r = lindep({x, pi_v, l2, l3});
  REQUIRE(r.found());
  CHECK(*r.coefficients == IntVector{1, -3, 5, -7});
  REQUIRE(r.residual);
  CHECK(r.residual->log10_magnitude() < -40);

  // Scale invariance: multiplying every input by the same constant keeps the relation.
  const BigReal s(Rational(17, 3), p);
  const RelationResult scaled = lindep({x * s, pi_v * s, l2 * s, l3 * s});
  REQUIRE(scaled.found());
  CHECK(*scaled.coefficients == *r.coefficients);
}

TEST_CASE("lindep reports an exclusion bound when nothing is found") {
  const Precision p(50);
  const RelationResult r = lindep({pi(p), BigReal(1, p), ln(Rational(2), p)});
  CHECK_FALSE(r.found());
  REQUIRE(r.exclusion_bound);
  CHECK(*r.exclusion_bound > 1e6);
  CHECK(r.norm == 0.0);

  // Soundness: any relation reported at d digits still holds at d + 20.
  const Precision lo(40);
  const Precision hi(60);
  const RelationResult a = lindep({pi(lo) * pi(lo), ln(Rational(3), lo), BigReal(Rational(5, 2), lo)});
  if (a.found()) {
    const auto& c = *a.coefficients;
    const BigReal v = pi(hi) * pi(hi) * BigReal(c[0], hi) + ln(Rational(3), hi) * BigReal(c[1], hi) +
                      BigReal(Rational(5, 2), hi) * BigReal(c[2], hi);
    CHECK(v.log10_magnitude() < -45);
  }
}

TEST_CASE("lindep argument checks") {
  const Precision p(40);
  CHECK_THROWS_AS(lindep({pi(p)}), ArgumentError);
  CHECK_THROWS_AS(lindep({pi(p), pi(Precision(50))}), PrecisionError);
  CHECK_THROWS_AS(lindep({pi(Precision(20)), BigReal(1, Precision(20))}), PrecisionError);
  CHECK(lindep_scale_digits(Precision(60)) == 50);
}
