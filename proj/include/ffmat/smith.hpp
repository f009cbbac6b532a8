#pragma once

#include <cstddef>
#include <vector>

#include "ffmat/bareiss.hpp"

namespace ffmat {

/// Smith normal form diag(d_1, ..., d_min(m,n)) with d_i | d_{i+1}, entries
/// canonical (nonnegative in Z, monic in Q[x]), trailing zeros for rank
/// deficiency. `determinantal[k]` is d*_{k+1} = d_1 * ... * d_{k+1}.
struct SmithForm {
  Ring ring = Ring::Z;
  std::vector<RingElement> diagonal;
  std::vector<RingElement> determinantal;

  static SmithForm from_diagonal(Ring ring, std::vector<RingElement> diagonal);
};

/// Elementary row/column reduction over a Euclidean domain.
SmithForm smith_normal_form(const ExactMatrix& a);

/// d*_1..d*_kmax as gcds of all k x k minors. Throws TooLarge unless
/// kmax <= min(m, n) <= 6.
std::vector<RingElement> determinantal_divisors_bruteforce(const ExactMatrix& a, std::size_t kmax);

/// Removes d*_k from row k of U and d*_{k-1} from column k of L, dividing
/// D(k,k) by d*_{k-1} d*_k (0-based: row k uses determinantal[k] and
/// determinantal[k-1]). `sf` must come from the same matrix.
FFLUDecomposition divisor_cancellation(FFLUDecomposition dec, const SmithForm& sf);

/// True iff d*_k divides every entry of row k of U and of column k of L.
bool check_determinantal_divisibility(const FFLUDecomposition& dec, const SmithForm& sf);

}  // namespace ffmat
