#pragma once

#include "ffmat/bareiss.hpp"
#include "ffmat/smith.hpp"

namespace ffmat {

/// A = L D^-1 L^t for a symmetric A whose decomposition needs no pivoting.
struct CholeskyFactors {
  ExactMatrix L;
  ExactMatrix D;
};

/// Throws NotSymmetric, or PermutationRequired if elimination hits a zero
/// pivot before the rank is exhausted.
CholeskyFactors ff_cholesky(const ExactMatrix& a);

/// Fraction-free QR: A = Theta D^-1 R with Theta^t Theta = D.
struct FFQRDecomposition {
  ExactMatrix Theta;  // m x n
  ExactMatrix D;      // n x n diagonal
  ExactMatrix R;      // n x n upper triangular
};

/// Eliminates the augmented matrix (A^t A | A^t) in one Bareiss pass; the
/// left block yields R, the right block Theta^t. Requires n <= m and full
/// column rank (RankDeficient otherwise).
FFQRDecomposition ff_qr(const ExactMatrix& a);

/// Divides Theta's last column and R's last row by det A and D(n,n) by
/// (det A)^2. Square, full-rank A only.
FFQRDecomposition reduced_qr(const ExactMatrix& a);

/// Theta^t Theta == D and Theta * adj(D) * R == det(D) * A, R upper
/// triangular with a nonzero diagonal.
bool check_qr_invariants(const FFQRDecomposition& qr, const ExactMatrix& a);

/// Theta(i, n-1) == (-1)^(i+n-1) * minor_{i,n-1}(A) * det A for every i.
bool check_last_column(const ExactMatrix& a, const FFQRDecomposition& qr);

/// d*_k divides column k of Theta and row k of R, and d*_{k-1} d*_k divides
/// D(k,k).
bool check_divisor_divisibility(const ExactMatrix& a, const FFQRDecomposition& qr,
                                const SmithForm& sf);

/// For two decompositions of the same full-rank square A: T = Theta1^t Theta2
/// is diagonal and T * R2 == D2 * R1.
bool check_uniqueness_relation(const FFQRDecomposition& first, const FFQRDecomposition& second);

}  // namespace ffmat
