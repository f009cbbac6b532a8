#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ffmat/bareiss.hpp"
#include "ffmat/primes.hpp"

namespace ffmat {

/// A divisor predicted for one row of U (or one column of L). `index` is the
/// 0-based row/column.
struct FactorPrediction {
  std::size_t index;
  RingElement divisor;
};

/// Predicted common factor of U's rows from three entries of L each:
///
///   gcd(L(k-1,k-1), L(k,k-1)) / gcd(L(k-1,k-1), L(k,k-1), L(k-2,k-2))
///
/// (0-based k = 1 .. min(m-2, r-1), with L(-1,-1) = 1). The prediction for
/// row k always divides the gcd of that row. `l` must be the unmodified L of
/// decompose().
std::vector<FactorPrediction> predict_row_factors(const ExactMatrix& l);

/// Mirror image for the columns of L, read off U. `rows_of_a` bounds the
/// range exactly as for rows: k = 1 .. min(rows_of_a - 2, r - 1).
std::vector<FactorPrediction> predict_column_factors(const ExactMatrix& u, std::size_t rows_of_a);

struct FactorReport {
  Ring ring = Ring::Z;
  std::vector<RingElement> row_gcds;     // g_k of U
  std::vector<RingElement> column_gcds;  // of L
  std::vector<FactorPrediction> predicted_row_divisors;
  std::vector<FactorPrediction> predicted_column_divisors;
  /// Factorization of each nonzero g_k (Z only). Left empty for values above
  /// the size limit passed to analyze_factors.
  std::vector<std::optional<PrimeFactorization>> row_gcd_factors;
};

FactorReport analyze_factors(const FFLUDecomposition& dec, std::size_t max_factor_bits = 96);

}  // namespace ffmat
