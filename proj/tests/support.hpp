#pragma once

// Shared helpers for the unit and acceptance tests. The oracles here avoid
// the library's elimination code on purpose.

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ffmat/matrix.hpp"
#include "ffmat/matrix_io.hpp"
#include "ffmat/rings.hpp"

namespace ffmat::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(FFMAT_FIXTURE_DIR) / name;
}

inline ExactMatrix load(const std::string& name) { return read_matrix_file(fixture(name)); }

inline ExactMatrix mat(Ring ring, std::size_t m, std::size_t n, const std::string& rows) {
  return parse_matrix(std::string(ring_name(ring) == "Z" ? "ring Z\n" : "ring Q[x]\n") +
                      std::to_string(m) + " " + std::to_string(n) + "\n" + rows);
}

inline RingElement el(Ring ring, const std::string& text) { return parse_element(text, ring); }

// Leibniz expansion: sum over all permutations with their signs.
inline RingElement leibniz_det(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RingElement total = RingElement::zero(a.ring());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    RingElement term = RingElement::one(a.ring());
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline RingElement leibniz_minor(const ExactMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  std::vector<RingElement> entries;
  for (std::size_t i : rows)
    for (std::size_t j : cols) entries.push_back(a(i, j));
  return leibniz_det(ExactMatrix(a.ring(), rows.size(), cols.size(), std::move(entries)));
}

// Rank of a rational matrix by textbook Gaussian elimination with fractions.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Rank over the fraction field. For Q[x] the matrix is evaluated at several
// points; evaluation never raises the rank and lowers it only at finitely
// many points, so the maximum over enough points is exact in practice.
inline std::size_t field_rank(const ExactMatrix& a) {
  auto at = [&](const Rational* x) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        m[i][j] = x ? a(i, j).polynomial().evaluate(*x) : Rational(a(i, j).integer());
    return rational_rank(std::move(m));
  };
  if (a.ring() == Ring::Z) return at(nullptr);
  std::size_t best = 0;
  for (const Rational x : {Rational(3, 7), Rational(-11, 5), Rational(17), Rational(29, 13), Rational(-2, 9)}) {
    best = std::max(best, at(&x));
  }
  return best;
}

inline ExactMatrix random_z(std::mt19937_64& rng, std::size_t m, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<RingElement> e;
  for (std::size_t i = 0; i < m * n; ++i) e.emplace_back(BigInt(d(rng)));
  return ExactMatrix(Ring::Z, m, n, std::move(e));
}

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  for (auto& r : c) r.canonicalize();
  return Polynomial(std::move(c));
}

inline ExactMatrix random_qx(std::mt19937_64& rng, std::size_t m, std::size_t n, int max_degree) {
  std::vector<RingElement> e;
  for (std::size_t i = 0; i < m * n; ++i) e.emplace_back(random_poly(rng, max_degree));
  return ExactMatrix(Ring::Qx, m, n, std::move(e));
}

// Schoolbook product, independent of the library's multiply().
inline ExactMatrix naive_product(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

}  // namespace ffmat::testing
