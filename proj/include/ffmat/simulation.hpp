#pragma once

// Seeded Monte-Carlo experiments on common factors of random integer
// matrices. Every trial draws from its own counter-based stream derived from
// (seed, size, trial index), so results do not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ffmat/matrix.hpp"
#include "ffmat/statistics.hpp"

namespace ffmat::sim {

/// SplitMix64 stream; satisfies UniformRandomBitGenerator.
class TrialRng {
 public:
  using result_type = std::uint64_t;

  TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

 private:
  std::uint64_t state_;
};

/// Uniform integer in [lo, hi].
std::uint64_t uniform(TrialRng& rng, std::uint64_t lo, std::uint64_t hi);

/// m x n integer matrix with entries uniform in [lo, hi].
ExactMatrix random_integer_matrix(std::size_t m, std::size_t n, std::uint64_t lo, std::uint64_t hi,
                                  TrialRng& rng);

struct SimulationConfig {
  std::vector<std::size_t> sizes;
  std::size_t samples = 1000;
  std::uint64_t bound = 1000000000;  // entries drawn from [0, bound]
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SizeStatistics {
  std::size_t n = 0;
  double mean = 0;
  double std_error = 0;
  double analytic = 0;
  std::vector<std::size_t> counts;  // one per trial
};

struct SimulationResult {
  std::vector<SizeStatistics> sizes;

  /// Header "n,mean,stderr,analytic", six fractional digits.
  std::string to_csv() const;
};

/// For each size n and trial: decompose a random n x n matrix (first nonzero
/// pivot, so singular draws are pivoted rather than rejected), take the row
/// gcds g_1..g_{n-1} of U and count their prime factors with multiplicity.
/// `analytic` is expected_factor_count(n).
SimulationResult simulate_row_factors(const SimulationConfig& cfg,
                                      const stats::SeriesConfig& series = {});

/// Frequency of gcd(a,b)/gcd(a,b,p) != 1 for a, b, p uniform in [1, bound].
double simulate_gcd_ratio(std::size_t samples, std::uint64_t bound, std::uint64_t seed);

struct CoverageSize {
  std::size_t n = 0;
  std::size_t predicted = 0;
  std::size_t actual = 0;
};

struct CoverageResult {
  std::vector<CoverageSize> sizes;
  std::size_t predicted = 0;
  std::size_t actual = 0;
  /// predicted / actual, 0 when nothing was found.
  double ratio() const;
  std::string to_csv() const;
};

/// Share of the prime factors of g_k (rows 2..n-1, counted with
/// multiplicity) that the three-entry predictor read off L accounts for.
CoverageResult simulate_prediction_coverage(const SimulationConfig& cfg);

/// Sum of prime multiplicities of g_1..g_{n-1} for one matrix.
std::size_t row_factor_count(const ExactMatrix& a);

}  // namespace ffmat::sim
