#include <numeric>
#include <string>
#include <utility>

#include "ffmat/errors.hpp"
#include "ffmat/matrix.hpp"

namespace ffmat {

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, RingElement::zero(ring)) {}

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols,
                         std::vector<RingElement> entries)
    : ring_(ring), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ShapeMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                        std::to_string(data_.size()));
  }
  for (const auto& e : data_) {
    if (e.ring() != ring) throw RingMismatch("matrix entry outside the declared ring");
  }
}

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElement::one(ring);
  return m;
}

ExactMatrix ExactMatrix::diagonal(Ring ring, std::span<const RingElement> entries) {
  ExactMatrix m(ring, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].ring() != ring) throw RingMismatch("diagonal entry outside the declared ring");
    m(i, i) = entries[i];
  }
  return m;
}

ExactMatrix ExactMatrix::integers(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<RingElement> entries;
  entries.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw ShapeMismatch("ragged integer matrix literal");
    for (long v : row) entries.emplace_back(BigInt(v));
  }
  return ExactMatrix(Ring::Z, m, n, std::move(entries));
}

const RingElement& ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw ShapeMismatch("index (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return (*this)(i, j);
}

std::vector<RingElement> ExactMatrix::row(std::size_t i) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

std::vector<RingElement> ExactMatrix::column(std::size_t j) const {
  std::vector<RingElement> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void ExactMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block outside matrix");
  ExactMatrix out(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool ExactMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

void Permutation::swap(std::size_t a, std::size_t b) { std::swap(images_[a], images_[b]); }

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = i;
  return inv;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeMismatch("composing permutations of different sizes");
  Permutation out;
  out.images_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.ring() != b.ring()) throw RingMismatch("multiplying matrices over different rings");
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  }
  ExactMatrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const RingElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix out(a.ring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ExactMatrix scale(const ExactMatrix& a, const RingElement& c) {
  ExactMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  return out;
}

ExactMatrix select(const ExactMatrix& a, const Permutation& rows, const Permutation& cols) {
  if (rows.size() != a.rows() || cols.size() != a.cols()) {
    throw ShapeMismatch("permutation size does not match matrix");
  }
  ExactMatrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

namespace {

RingElement cofactor_det(const ExactMatrix& m) {
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
}

// Single-step fraction-free elimination with row swaps.
RingElement bareiss_det(ExactMatrix m) {
  const std::size_t n = m.rows();
  const Ring ring = m.ring();
  RingElement prev = RingElement::one(ring);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && m(pivot_row, k).is_zero()) ++pivot_row;
    if (pivot_row == n) return RingElement::zero(ring);
    if (pivot_row != k) {
      m.swap_rows(pivot_row, k);
      negate = !negate;
    }
    const RingElement pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(pivot * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = RingElement::zero(ring);
    }
    prev = pivot;
  }
  return negate ? -prev : prev;
}

void check_index_set(const IndexSet& set, std::size_t bound) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= bound || (i > 0 && set[i] <= set[i - 1])) {
      throw ShapeMismatch("index set must be strictly increasing and within bounds");
    }
  }
}

}  // namespace

RingElement minor(const ExactMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw ShapeMismatch("minor needs equally sized, nonempty index sets");
  }
  check_index_set(rows, a.rows());
  check_index_set(cols, a.cols());
  const std::size_t k = rows.size();
  ExactMatrix sub(a.ring(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
  return k <= 3 ? cofactor_det(sub) : bareiss_det(std::move(sub));
}

RingElement determinant(const ExactMatrix& a) {
  if (!a.is_square()) throw ShapeMismatch("determinant of a non-square matrix");
  if (a.rows() == 0) return RingElement::one(a.ring());
  IndexSet all(a.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return minor(a, all, all);
}

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet current(k);
  std::iota(current.begin(), current.end(), std::size_t{0});
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace ffmat
