#include <optional>
#include <string>
#include <utility>

#include "ffmat/bareiss.hpp"
#include "ffmat/errors.hpp"

namespace ffmat {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> find_pivot(const ExactMatrix& u, std::size_t k, PivotStrategy strategy) {
  std::optional<Position> best;
  std::optional<SizeKey> best_key;
  for (std::size_t j = k; j < u.cols(); ++j) {
    for (std::size_t i = k; i < u.rows(); ++i) {
      if (u(i, j).is_zero()) continue;
      if (strategy == PivotStrategy::FirstNonzero) return Position{i, j};
      SizeKey key = size_measure(u(i, j));
      if (!best_key || key < *best_key) {
        best = Position{i, j};
        best_key = std::move(key);
      }
    }
  }
  return best;
}

void check_divisor_count(const FFLUDecomposition& dec, std::size_t count) {
  if (count != dec.rank) {
    throw ShapeMismatch("expected " + std::to_string(dec.rank) + " divisors, got " +
                        std::to_string(count));
  }
}

}  // namespace

FFLUDecomposition decompose(const ExactMatrix& a, PivotStrategy strategy) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const Ring ring = a.ring();

  FFLUDecomposition dec;
  dec.row_perm = Permutation::identity(m);
  dec.col_perm = Permutation::identity(n);
  ExactMatrix u = a;
  ExactMatrix l(ring, m, std::min(m, n));
  RingElement prev = RingElement::one(ring);

  std::size_t k = 0;
  for (; k < std::min(m, n); ++k) {
    auto pos = find_pivot(u, k, strategy);
    if (!pos) break;
    if (pos->row != k) {
      u.swap_rows(pos->row, k);
      l.swap_rows(pos->row, k);
      dec.row_perm.swap(pos->row, k);
    }
    if (pos->col != k) {
      u.swap_cols(pos->col, k);
      dec.col_perm.swap(pos->col, k);
    }

    const RingElement pivot = u(k, k);
    l(k, k) = pivot;
    for (std::size_t i = k + 1; i < m; ++i) l(i, k) = u(i, k);

    const bool divide = !prev.is_one();
    for (std::size_t i = k + 1; i < m; ++i) {
      const RingElement factor = u(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        RingElement value = pivot * u(i, j);
        if (!factor.is_zero() && !u(k, j).is_zero()) value -= factor * u(k, j);
        u(i, j) = divide ? exact_div(value, prev) : std::move(value);
      }
      u(i, k) = RingElement::zero(ring);
    }
    dec.pivots.push_back(pivot);
    prev = pivot;
  }

  const std::size_t r = k;
  dec.rank = r;
  dec.L = l.block(0, 0, m, r);
  dec.U = u.block(0, 0, r, n);
  dec.D = ExactMatrix(ring, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    dec.D(i, i) = i == 0 ? dec.pivots[0] : dec.pivots[i - 1] * dec.pivots[i];
  }
  return dec;
}

FFLUDecomposition cancel_row_factors(FFLUDecomposition dec, std::span<const RingElement> divisors) {
  check_divisor_count(dec, divisors.size());
  for (std::size_t k = 0; k < dec.rank; ++k) {
    const RingElement& d = divisors[k];
    if (d.is_one()) continue;
    const auto row = dec.U.row(k);
    if (d.is_zero() || !divides(d, gcd_seq(row, dec.ring()))) {
      throw NotDivisible("divisor " + to_string(d) + " does not divide row " +
                         std::to_string(k + 1) + " of U");
    }
    for (std::size_t j = k; j < dec.U.cols(); ++j) dec.U(k, j) = exact_div(dec.U(k, j), d);
    dec.D(k, k) = exact_div(dec.D(k, k), d);
  }
  return dec;
}

FFLUDecomposition cancel_column_factors(FFLUDecomposition dec,
                                        std::span<const RingElement> divisors) {
  check_divisor_count(dec, divisors.size());
  for (std::size_t k = 0; k < dec.rank; ++k) {
    const RingElement& d = divisors[k];
    if (d.is_one()) continue;
    const auto col = dec.L.column(k);
    if (d.is_zero() || !divides(d, gcd_seq(col, dec.ring()))) {
      throw NotDivisible("divisor " + to_string(d) + " does not divide column " +
                         std::to_string(k + 1) + " of L");
    }
    const RingElement e = gcd(d, dec.D(k, k));
    if (e.is_one()) continue;
    for (std::size_t i = k; i < dec.L.rows(); ++i) dec.L(i, k) = exact_div(dec.L(i, k), e);
    dec.D(k, k) = exact_div(dec.D(k, k), e);
  }
  return dec;
}

bool scaled_reconstruction_check(const FFLUDecomposition& dec, const ExactMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t r = dec.rank;
  if (dec.L.rows() != m || dec.L.cols() != r || dec.U.rows() != r || dec.U.cols() != n ||
      dec.D.rows() != r || dec.D.cols() != r || dec.row_perm.size() != m ||
      dec.col_perm.size() != n) {
    throw ShapeMismatch("decomposition shapes do not match the matrix");
  }
  if (dec.ring() != a.ring()) throw RingMismatch("decomposition and matrix over different rings");
  if (!dec.D.is_diagonal()) return false;

  const Ring ring = a.ring();
  RingElement det_d = RingElement::one(ring);
  for (std::size_t k = 0; k < r; ++k) {
    if (dec.D(k, k).is_zero()) return false;
    det_d *= dec.D(k, k);
  }
  std::vector<RingElement> adj;
  adj.reserve(r);
  for (std::size_t k = 0; k < r; ++k) adj.push_back(exact_div(det_d, dec.D(k, k)));

  ExactMatrix scaled_l = dec.L;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) scaled_l(i, k) *= adj[k];
  const ExactMatrix lhs = multiply(scaled_l, dec.U);
  const ExactMatrix rhs = scale(select(a, dec.row_perm, dec.col_perm), det_d);
  return lhs == rhs;
}

std::vector<RingElement> row_gcds(const ExactMatrix& u) {
  std::vector<RingElement> out;
  out.reserve(u.rows());
  for (std::size_t k = 0; k < u.rows(); ++k) {
    const auto row = u.row(k);
    const std::size_t first = std::min(k, row.size());
    out.push_back(gcd_seq(std::span(row).subspan(first), u.ring()));
  }
  return out;
}

std::vector<RingElement> column_gcds(const ExactMatrix& l) {
  std::vector<RingElement> out;
  out.reserve(l.cols());
  for (std::size_t k = 0; k < l.cols(); ++k) {
    const auto col = l.column(k);
    const std::size_t first = std::min(k, col.size());
    out.push_back(gcd_seq(std::span(col).subspan(first), l.ring()));
  }
  return out;
}

}  // namespace ffmat
