#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <thread>

#include "ffmat/bareiss.hpp"
#include "ffmat/factors.hpp"
#include "ffmat/primes.hpp"
#include "ffmat/simulation.hpp"

namespace ffmat::sim {
namespace {

constexpr std::uint64_t kGcdRatioStream = 0x7431'0000'0000'0000ULL;
constexpr std::uint64_t kCoverageStream = 0xC0FE'0000'0000'0000ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::size_t omega(const RingElement& value) {
  if (value.is_zero()) return 0;
  return total_multiplicity(factor_integer(value.integer()));
}

std::string format_fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
    : state_(mix(mix(seed ^ 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0x632BE59BD9B4E019ULL) ^
                 (trial * 0xD1B54A32D192ED03ULL))) {}

TrialRng::result_type TrialRng::operator()() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix(state_);
}

std::uint64_t uniform(TrialRng& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == TrialRng::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = TrialRng::max() - TrialRng::max() % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + draw % range;
}

ExactMatrix random_integer_matrix(std::size_t m, std::size_t n, std::uint64_t lo, std::uint64_t hi,
                                  TrialRng& rng) {
  std::vector<RingElement> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < m * n; ++i) {
    entries.emplace_back(BigInt(static_cast<unsigned long>(uniform(rng, lo, hi))));
  }
  return ExactMatrix(Ring::Z, m, n, std::move(entries));
}

std::size_t row_factor_count(const ExactMatrix& a) {
  const FFLUDecomposition dec = decompose(a, PivotStrategy::FirstNonzero);
  const auto gcds = row_gcds(dec.U);
  const std::size_t rows = std::min(gcds.size(), a.rows() == 0 ? 0 : a.rows() - 1);
  std::size_t total = 0;
  for (std::size_t k = 0; k < rows; ++k) total += omega(gcds[k]);
  return total;
}

std::string SimulationResult::to_csv() const {
  std::string out = "n,mean,stderr,analytic\n";
  for (const auto& s : sizes) {
    out += std::to_string(s.n) + "," + format_fixed(s.mean) + "," + format_fixed(s.std_error) +
           "," + format_fixed(s.analytic) + "\n";
  }
  return out;
}

SimulationResult simulate_row_factors(const SimulationConfig& cfg,
                                      const stats::SeriesConfig& series) {
  SimulationResult result;
  for (std::size_t n : cfg.sizes) {
    SizeStatistics s;
    s.n = n;
    s.counts.assign(cfg.samples, 0);
    parallel_for(cfg.samples, cfg.threads, [&](std::size_t trial) {
      TrialRng rng(cfg.seed, n, trial);
      s.counts[trial] = row_factor_count(random_integer_matrix(n, n, 0, cfg.bound, rng));
    });
    const double total = std::accumulate(s.counts.begin(), s.counts.end(), 0.0);
    s.mean = cfg.samples == 0 ? 0.0 : total / static_cast<double>(cfg.samples);
    if (cfg.samples > 1) {
      double sq = 0;
      for (std::size_t c : s.counts) sq += (static_cast<double>(c) - s.mean) * (static_cast<double>(c) - s.mean);
      s.std_error = std::sqrt(sq / static_cast<double>(cfg.samples - 1) / static_cast<double>(cfg.samples));
    }
    s.analytic = n >= 2 ? stats::expected_factor_count(static_cast<unsigned>(n), series) : 0.0;
    result.sizes.push_back(std::move(s));
  }
  return result;
}

double simulate_gcd_ratio(std::size_t samples, std::uint64_t bound, std::uint64_t seed) {
  if (samples == 0) return 0.0;
  std::vector<unsigned char> hits(samples, 0);
  parallel_for(samples, 0, [&](std::size_t trial) {
    TrialRng rng(seed, kGcdRatioStream, trial);
    const std::uint64_t a = uniform(rng, 1, bound);
    const std::uint64_t b = uniform(rng, 1, bound);
    const std::uint64_t p = uniform(rng, 1, bound);
    const std::uint64_t g = std::gcd(a, b);
    hits[trial] = g / std::gcd(g, p) != 1;
  });
  const std::size_t count = static_cast<std::size_t>(std::count(hits.begin(), hits.end(), 1));
  return static_cast<double>(count) / static_cast<double>(samples);
}

double CoverageResult::ratio() const {
  return actual == 0 ? 0.0 : static_cast<double>(predicted) / static_cast<double>(actual);
}

std::string CoverageResult::to_csv() const {
  std::string out = "n,predicted,actual,ratio\n";
  for (const auto& s : sizes) {
    const double r = s.actual == 0 ? 0.0 : static_cast<double>(s.predicted) / static_cast<double>(s.actual);
    out += std::to_string(s.n) + "," + std::to_string(s.predicted) + "," +
           std::to_string(s.actual) + "," + format_fixed(r) + "\n";
  }
  return out;
}

CoverageResult simulate_prediction_coverage(const SimulationConfig& cfg) {
  CoverageResult result;
  for (std::size_t n : cfg.sizes) {
    std::vector<std::size_t> predicted(cfg.samples, 0), actual(cfg.samples, 0);
    parallel_for(cfg.samples, cfg.threads, [&](std::size_t trial) {
      TrialRng rng(cfg.seed, kCoverageStream + n, trial);
      const ExactMatrix a = random_integer_matrix(n, n, 0, cfg.bound, rng);
      const FFLUDecomposition dec = decompose(a, PivotStrategy::FirstNonzero);
      const auto gcds = row_gcds(dec.U);
      for (const auto& prediction : predict_row_factors(dec.L)) {
        predicted[trial] += omega(prediction.divisor);
        actual[trial] += omega(gcds[prediction.index]);
      }
    });
    CoverageSize s;
    s.n = n;
    s.predicted = std::accumulate(predicted.begin(), predicted.end(), std::size_t{0});
    s.actual = std::accumulate(actual.begin(), actual.end(), std::size_t{0});
    result.predicted += s.predicted;
    result.actual += s.actual;
    result.sizes.push_back(s);
  }
  return result;
}

}  // namespace ffmat::sim
