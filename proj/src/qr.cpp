#include <numeric>
#include <utility>

#include "ffmat/errors.hpp"
#include "ffmat/qr.hpp"

namespace ffmat {
namespace {

// Theta * adj(D) * R == det(D) * A for diagonal D.
bool scaled_product_matches(const ExactMatrix& theta, const ExactMatrix& d, const ExactMatrix& r,
                            const ExactMatrix& a) {
  const Ring ring = a.ring();
  RingElement det_d = RingElement::one(ring);
  for (std::size_t k = 0; k < d.rows(); ++k) {
    if (d(k, k).is_zero()) return false;
    det_d *= d(k, k);
  }
  ExactMatrix scaled = theta;
  for (std::size_t k = 0; k < d.rows(); ++k) {
    const RingElement adj = exact_div(det_d, d(k, k));
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, k) *= adj;
  }
  return multiply(scaled, r) == scale(a, det_d);
}

}  // namespace

CholeskyFactors ff_cholesky(const ExactMatrix& a) {
  if (!a.is_symmetric()) throw NotSymmetric("fraction-free Cholesky needs a symmetric matrix");
  FFLUDecomposition dec = decompose(a, PivotStrategy::FirstNonzero);
  if (dec.has_permutations()) {
    throw PermutationRequired("zero leading principal minor; elimination needs pivoting");
  }
  if (!(dec.U == transpose(dec.L))) {
    throw VerificationFailure("symmetric decomposition did not give U = L^t");
  }
  return {std::move(dec.L), std::move(dec.D)};
}

FFQRDecomposition ff_qr(const ExactMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n > m) throw ShapeMismatch("QR needs at least as many rows as columns");
  const ExactMatrix at = transpose(a);
  const ExactMatrix gram = multiply(at, a);

  ExactMatrix augmented(a.ring(), n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = gram(i, j);
    for (std::size_t j = 0; j < m; ++j) augmented(i, n + j) = at(i, j);
  }
  FFLUDecomposition dec = decompose(augmented, PivotStrategy::FirstNonzero);
  if (dec.rank != n || dec.has_permutations()) {
    throw RankDeficient("matrix does not have full column rank");
  }

  FFQRDecomposition qr{transpose(dec.U.block(0, n, n, m)), std::move(dec.D),
                       dec.U.block(0, 0, n, n)};
  if (!(dec.L == transpose(qr.R))) {
    throw VerificationFailure("Gramian decomposition did not give L = R^t");
  }
  if (!(multiply(transpose(qr.Theta), qr.Theta) == qr.D)) {
    throw VerificationFailure("Theta^t Theta differs from D");
  }
  return qr;
}

FFQRDecomposition reduced_qr(const ExactMatrix& a) {
  if (!a.is_square()) throw ShapeMismatch("reduced QR is defined for square matrices");
  FFQRDecomposition qr = ff_qr(a);
  const std::size_t n = a.cols();
  if (n == 0) return qr;
  const RingElement det = determinant(a);
  for (std::size_t i = 0; i < n; ++i) qr.Theta(i, n - 1) = exact_div(qr.Theta(i, n - 1), det);
  for (std::size_t j = 0; j < n; ++j) qr.R(n - 1, j) = exact_div(qr.R(n - 1, j), det);
  qr.D(n - 1, n - 1) = exact_div(qr.D(n - 1, n - 1), det * det);
  if (!(multiply(transpose(qr.Theta), qr.Theta) == qr.D)) {
    throw VerificationFailure("reduced Theta^t Theta differs from D");
  }
  return qr;
}

bool check_qr_invariants(const FFQRDecomposition& qr, const ExactMatrix& a) {
  const std::size_t n = a.cols();
  if (qr.Theta.rows() != a.rows() || qr.Theta.cols() != n || qr.D.rows() != n ||
      qr.D.cols() != n || qr.R.rows() != n || qr.R.cols() != n) {
    throw ShapeMismatch("QR factors do not match the matrix");
  }
  if (!qr.D.is_diagonal() || !qr.R.is_upper_triangular()) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (qr.R(k, k).is_zero()) return false;
  if (!(multiply(transpose(qr.Theta), qr.Theta) == qr.D)) return false;
  return scaled_product_matches(qr.Theta, qr.D, qr.R, a);
}

bool check_last_column(const ExactMatrix& a, const FFQRDecomposition& qr) {
  if (!a.is_square() || qr.Theta.rows() != a.rows() || qr.Theta.cols() != a.cols()) {
    throw ShapeMismatch("last-column check needs a square matrix and matching Theta");
  }
  const std::size_t n = a.rows();
  if (n == 0) return true;
  const RingElement det = determinant(a);
  if (n == 1) return qr.Theta(0, 0) == det;
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  IndexSet cols(all.begin(), all.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    IndexSet rows;
    for (std::size_t r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    RingElement expected = minor(a, rows, cols) * det;
    if ((i + n - 1) % 2 == 1) expected = -expected;
    if (!(qr.Theta(i, n - 1) == expected)) return false;
  }
  return true;
}

bool check_divisor_divisibility(const ExactMatrix& a, const FFQRDecomposition& qr,
                                const SmithForm& sf) {
  const std::size_t n = a.cols();
  if (sf.determinantal.size() < n) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const RingElement& d = sf.determinantal[k];
    for (std::size_t i = 0; i < qr.Theta.rows(); ++i)
      if (!divides(d, qr.Theta(i, k))) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (!divides(d, qr.R(k, j))) return false;
    if (k >= 1 && !divides(sf.determinantal[k - 1] * d, qr.D(k, k))) return false;
  }
  return true;
}

bool check_uniqueness_relation(const FFQRDecomposition& first, const FFQRDecomposition& second) {
  if (first.Theta.rows() != second.Theta.rows() || first.Theta.cols() != second.Theta.cols() ||
      first.R.rows() != second.R.rows() || first.D.rows() != second.D.rows()) {
    throw ShapeMismatch("decompositions have different shapes");
  }
  const ExactMatrix t = multiply(transpose(first.Theta), second.Theta);
  if (!t.is_diagonal()) return false;
  return multiply(t, second.R) == multiply(second.D, first.R);
}

}  // namespace ffmat
