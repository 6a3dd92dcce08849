#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "polylog/precision.hpp"
#include "polylog/rational.hpp"

namespace polylog {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

struct LllResult {
  IntMatrix basis;
  /// Squared Gram-Schmidt norms |b*_i|^2 of the reduced basis.
  std::vector<Rational> gram_schmidt_norms;
};

/// LLL reduction with delta = 3/4 in exact integer arithmetic (rows are
/// basis vectors). ArgumentError for ragged input, DomainError when the
/// rows are linearly dependent.
LllResult lll_reduce_detailed(const IntMatrix& basis);
IntMatrix lll_reduce(const IntMatrix& basis);

struct RelationResult {
  /// Integer relation with its first non-zero entry positive, if found.
  std::optional<IntVector> coefficients;
  /// |sum c_i x_i| at working precision; set with coefficients.
  std::optional<BigReal> residual;
  /// Euclidean norm of the coefficients; 0 when none were found.
  double norm = 0.0;
  /// When nothing was found: every relation has norm at least this.
  std::optional<double> exclusion_bound;

  bool found() const noexcept { return coefficients.has_value(); }
};

/// Scaling exponent used to build the lattice: digits - 10.
int lindep_scale_digits(const Precision& prec);

/// Integer relation search on rows (e_i | round(10^(digits-10) x_i)).
/// A reduced row is accepted when |sum c_i x_i| < 10^(-(digits-10)/2) and
/// its norm is at most 10^((digits-10)/(2n)); generic rows of the lattice
/// have norm near 10^((digits-10)/n).
/// ArgumentError for fewer than two values, PrecisionError for mixed
/// precisions or fewer than 30 digits.
RelationResult lindep(const std::vector<BigReal>& values);

}  // namespace polylog
