#include <optional>
#include <string>
#include <utility>

#include "ffmat/errors.hpp"
#include "ffmat/smith.hpp"

namespace ffmat {
namespace {

constexpr std::size_t kBruteForceLimit = 6;

RingElement unit_inverse(const RingElement& unit) {
  if (unit.ring() == Ring::Z) return unit;  // +-1
  return RingElement(Polynomial::constant(1 / unit.polynomial().leading()));
}

// row_i -= q * row_t
void subtract_row_multiple(ExactMatrix& m, std::size_t i, std::size_t t, const RingElement& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!m(t, j).is_zero()) m(i, j) -= q * m(t, j);
  }
}

void subtract_col_multiple(ExactMatrix& m, std::size_t j, std::size_t t, const RingElement& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, t).is_zero()) m(i, j) -= q * m(i, t);
  }
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const ExactMatrix& m,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::optional<SizeKey> best_key;
  for (std::size_t j = t; j < m.cols(); ++j) {
    for (std::size_t i = t; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      SizeKey key = size_measure(m(i, j));
      if (!best_key || key < *best_key) {
        best = {i, j};
        best_key = std::move(key);
      }
    }
  }
  return best;
}

}  // namespace

SmithForm SmithForm::from_diagonal(Ring ring, std::vector<RingElement> diagonal) {
  SmithForm sf;
  sf.ring = ring;
  sf.diagonal = std::move(diagonal);
  RingElement running = RingElement::one(ring);
  for (const auto& d : sf.diagonal) {
    running *= d;
    sf.determinantal.push_back(running);
  }
  return sf;
}

SmithForm smith_normal_form(const ExactMatrix& a) {
  ExactMatrix m = a;
  const Ring ring = a.ring();
  const std::size_t size = std::min(m.rows(), m.cols());
  std::vector<RingElement> diagonal;
  diagonal.reserve(size);

  std::size_t t = 0;
  for (; t < size; ++t) {
    for (;;) {
      auto pos = smallest_entry(m, t);
      if (!pos) break;
      m.swap_rows(pos->first, t);
      m.swap_cols(pos->second, t);
      const RingElement normalize = unit_inverse(unit_part(m(t, t)));
      if (!normalize.is_one()) {
        for (std::size_t j = t; j < m.cols(); ++j) m(t, j) *= normalize;
      }

      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t).is_zero()) continue;
        subtract_row_multiple(m, i, t, divmod(m(i, t), m(t, t)).quotient);
        dirty = dirty || !m(i, t).is_zero();
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j).is_zero()) continue;
        subtract_col_multiple(m, j, t, divmod(m(t, j), m(t, t)).quotient);
        dirty = dirty || !m(t, j).is_zero();
      }
      if (dirty) continue;  // a smaller remainder now exists; re-pivot

      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (!divides(m(t, t), m(i, j))) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      for (std::size_t j = t; j < m.cols(); ++j) m(t, j) += m(*offending, j);
    }
    if (m(t, t).is_zero()) break;
    diagonal.push_back(canonical(m(t, t)));
  }
  while (diagonal.size() < size) diagonal.push_back(RingElement::zero(ring));
  return SmithForm::from_diagonal(ring, std::move(diagonal));
}

std::vector<RingElement> determinantal_divisors_bruteforce(const ExactMatrix& a,
                                                           std::size_t kmax) {
  const std::size_t size = std::min(a.rows(), a.cols());
  if (size > kBruteForceLimit || kmax > size) {
    throw TooLarge("brute-force determinantal divisors need kmax <= min(m, n) <= " +
                   std::to_string(kBruteForceLimit));
  }
  std::vector<RingElement> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    RingElement g = RingElement::zero(a.ring());
    const auto row_sets = index_subsets(a.rows(), k);
    const auto col_sets = index_subsets(a.cols(), k);
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        g = gcd(g, minor(a, rows, cols));
        if (g.is_one()) break;
      }
      if (g.is_one()) break;
    }
    out.push_back(canonical(g));
  }
  return out;
}

FFLUDecomposition divisor_cancellation(FFLUDecomposition dec, const SmithForm& sf) {
  if (sf.determinantal.size() < dec.rank) {
    throw ShapeMismatch("Smith form has fewer entries than the decomposition's rank");
  }
  const Ring ring = dec.ring();
  for (std::size_t k = 0; k < dec.rank; ++k) {
    const RingElement& row_divisor = sf.determinantal[k];
    const RingElement col_divisor = k == 0 ? RingElement::one(ring) : sf.determinantal[k - 1];
    if (!row_divisor.is_one()) {
      for (std::size_t j = k; j < dec.U.cols(); ++j) dec.U(k, j) = exact_div(dec.U(k, j), row_divisor);
    }
    if (!col_divisor.is_one()) {
      for (std::size_t i = k; i < dec.L.rows(); ++i) dec.L(i, k) = exact_div(dec.L(i, k), col_divisor);
    }
    dec.D(k, k) = exact_div(dec.D(k, k), row_divisor * col_divisor);
  }
  return dec;
}

bool check_determinantal_divisibility(const FFLUDecomposition& dec, const SmithForm& sf) {
  if (sf.determinantal.size() < dec.rank) return false;
  for (std::size_t k = 0; k < dec.rank; ++k) {
    const RingElement& d = sf.determinantal[k];
    for (std::size_t j = 0; j < dec.U.cols(); ++j)
      if (!divides(d, dec.U(k, j))) return false;
    for (std::size_t i = 0; i < dec.L.rows(); ++i)
      if (!divides(d, dec.L(i, k))) return false;
  }
  return true;
}

}  // namespace ffmat
