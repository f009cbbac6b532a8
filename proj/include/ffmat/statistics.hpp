#pragma once

// Probability model for common row factors of U over the integers: the
// probability that all k x k minors of a random k x (k+1) integer matrix are
// divisible by p^j, the expected multiplicity of p in the content of the
// row-defining determinant, and the resulting expected prime-factor count of
// the row gcds g_1..g_{n-1}.

#include <cstddef>
#include <cstdint>

#include "ffmat/rings.hpp"

namespace ffmat::stats {

struct SeriesConfig {
  /// Prime sums run over p <= prime_cutoff. The neglected tail of a sum of
  /// Theta(p^-2) terms is O(1 / (N log N)).
  std::uint64_t prime_cutoff = 1000000;
  double series_tolerance = 1e-12;
};

/// (a; q)_k = prod_{i<k} (1 - a q^i).
Rational q_pochhammer(const Rational& a, const Rational& q, unsigned k);
/// Gaussian binomial [n choose k]_q.
Rational q_binomial(unsigned n, unsigned k, const Rational& q);

/// P_{p,j,k}: probability that every k x k minor of a random k x (k+1)
/// matrix is divisible by p^j. Exact; throws DomainError unless p is prime
/// and j, k >= 1.
Rational prob_minors_divisible_exact(std::uint64_t p, unsigned j, unsigned k);
double prob_minors_divisible(std::uint64_t p, unsigned j, unsigned k);
/// k -> infinity limit; the infinite product stops once its factors are
/// within series_tolerance of 1.
double prob_minors_divisible_limit(std::uint64_t p, unsigned j, const SeriesConfig& cfg = {});

/// M_{p,k} = sum_j P_{p,j,k} via the closed q-binomial form, exactly.
Rational expected_multiplicity_exact(std::uint64_t p, unsigned k);
double expected_multiplicity(std::uint64_t p, unsigned k);
/// M_{p,infinity}; each series term is an exact rational, the series stops
/// when a term drops below series_tolerance.
double expected_multiplicity_limit(std::uint64_t p, const SeriesConfig& cfg = {});

/// Floating-point forms used inside prime sums. The i = 1 term is combined
/// with -1/(p-1) analytically, which removes the cancellation that otherwise
/// costs log10(p) digits. No primality check.
long double expected_multiplicity_fast(std::uint64_t p, unsigned k);
long double expected_multiplicity_limit_fast(std::uint64_t p);

/// sum_{p <= cutoff} M_{p,infinity}; the asymptotic slope of the expected
/// factor count (about 0.89764).
double slope_constant(const SeriesConfig& cfg = {});

/// sum_p 1/(p^{n-k+1} - 1): factors of g_k not explained by the row's
/// determinant polynomial. Requires 1 <= k <= n-1.
double extra_statistical_factors(unsigned n, unsigned k, const SeriesConfig& cfg = {});

/// F(n) = sum_p sum_{k=0}^{n-2} (M_{p,k} + 1/(p^{k+2} - 1)): expected number
/// of prime factors (with multiplicity) in g_1..g_{n-1}. Requires n >= 2.
double expected_factor_count(unsigned n, const SeriesConfig& cfg = {});

/// zeta(3) via the accelerated central-binomial series.
double zeta3();
/// Probability that gcd(a,b)/gcd(a,b,p) != 1 for random integers:
/// 1 - 6 zeta(3) / pi^2, about 0.26924.
double gcd_ratio_constant();

}  // namespace ffmat::stats
