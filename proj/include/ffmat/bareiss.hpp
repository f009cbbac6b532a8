#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ffmat/matrix.hpp"

namespace ffmat {

enum class PivotStrategy {
  /// First nonzero entry of the trailing block, scanning column by column
  /// and top to bottom within a column.
  FirstNonzero,
  /// Nonzero entry with the smallest size_measure; ties go to the earliest
  /// entry in FirstNonzero scan order.
  SmallestMeasure,
};

/// Fraction-free LD^-1U decomposition of an m x n matrix A of rank r:
///
///   A(row_perm[i], col_perm[j]) = (L * D^-1 * U)(i, j)
///
/// with L (m x r) lower triangular, U (r x n) upper triangular and D (r x r)
/// diagonal. As produced by decompose(), L(k,k) = U(k,k) = p_k and
/// D = diag(p_1, p_1 p_2, ..., p_{r-1} p_r); the cancellation functions keep
/// the product intact but change those diagonals.
struct FFLUDecomposition {
  Permutation row_perm;
  Permutation col_perm;
  ExactMatrix L;
  ExactMatrix D;
  ExactMatrix U;
  std::size_t rank = 0;
  /// Pivots chosen during elimination; unchanged by cancellation.
  std::vector<RingElement> pivots;

  Ring ring() const noexcept { return U.ring(); }
  bool has_permutations() const { return !row_perm.is_identity() || !col_perm.is_identity(); }
};

/// Single-step Bareiss elimination recording L and D. Works for any shape
/// and rank; the zero matrix yields rank 0 with empty factors.
FFLUDecomposition decompose(const ExactMatrix& a,
                            PivotStrategy strategy = PivotStrategy::FirstNonzero);

/// Divides row k of U and D(k,k) by divisors[k]. Each divisor must divide
/// every entry of its row (NotDivisible otherwise).
FFLUDecomposition cancel_row_factors(FFLUDecomposition dec, std::span<const RingElement> divisors);

/// For each column k, requires divisors[k] | L(*,k) (NotDivisible otherwise)
/// and cancels e_k = gcd(divisors[k], D(k,k)) from L(*,k) and D(k,k); only
/// that part of a requested factor can be removed once D has been reduced.
FFLUDecomposition cancel_column_factors(FFLUDecomposition dec,
                                        std::span<const RingElement> divisors);

/// Checks L * adj(D) * U == det(D) * A(row_perm, col_perm) where
/// adj(D) = det(D) * D^-1. This is equivalent to A = P_r L D^-1 U P_c over
/// the fraction field but stays inside the ring. Throws ShapeMismatch on
/// inconsistent shapes.
bool scaled_reconstruction_check(const FFLUDecomposition& dec, const ExactMatrix& a);

/// Row-wise gcds of the (possibly trapezoidal) U: g_k = gcd(U(k, k..n-1)).
std::vector<RingElement> row_gcds(const ExactMatrix& u);
/// Column-wise gcds of L: gcd(L(k..m-1, k)).
std::vector<RingElement> column_gcds(const ExactMatrix& l);

}  // namespace ffmat
