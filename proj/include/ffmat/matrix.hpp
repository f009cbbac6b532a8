#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ffmat/rings.hpp"

namespace ffmat {

/// Dense row-major matrix over Z or Q[x]. Every entry lives in ring(); empty
/// shapes (0 x n, m x 0) are valid.
class ExactMatrix {
 public:
  ExactMatrix() : ExactMatrix(Ring::Z, 0, 0) {}
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Throws ShapeMismatch if entries.size() != rows*cols, RingMismatch if an
  /// entry is from another ring.
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<RingElement> entries);

  static ExactMatrix identity(Ring ring, std::size_t n);
  static ExactMatrix diagonal(Ring ring, std::span<const RingElement> entries);
  /// Integer matrix from nested initializer data, e.g. {{1, 2}, {3, 4}}.
  static ExactMatrix integers(std::initializer_list<std::initializer_list<long>> rows);

  Ring ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const RingElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RingElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingElement& at(std::size_t i, std::size_t j) const;

  std::vector<RingElement> row(std::size_t i) const;
  std::vector<RingElement> column(std::size_t j) const;
  std::span<const RingElement> entries() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_symmetric() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> data_;
};

/// Bijection on {0..n-1}; `(*this)[i]` is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);  // throws DomainError if not a bijection
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  bool is_identity() const;

  void swap(std::size_t a, std::size_t b);
  Permutation inverse() const;
  /// (a * b)[i] = a[b[i]].
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

  /// out[i] = values[(*this)[i]].
  template <typename T>
  std::vector<T> gather(std::span<const T> values) const {
    std::vector<T> out;
    out.reserve(images_.size());
    for (std::size_t i : images_) out.push_back(values[i]);
    return out;
  }

 private:
  std::vector<std::size_t> images_;
};

/// Strictly increasing row or column indices.
using IndexSet = std::vector<std::size_t>;

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix transpose(const ExactMatrix& a);
ExactMatrix scale(const ExactMatrix& a, const RingElement& c);

/// B(i, j) = A(rows[i], cols[j]).
ExactMatrix select(const ExactMatrix& a, const Permutation& rows, const Permutation& cols);

/// Determinant of A restricted to the given rows and columns. Cofactor
/// expansion up to 3x3, fraction-free elimination above.
RingElement minor(const ExactMatrix& a, const IndexSet& rows, const IndexSet& cols);
RingElement determinant(const ExactMatrix& a);

/// All strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k);

}  // namespace ffmat
