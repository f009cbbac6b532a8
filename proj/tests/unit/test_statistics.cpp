#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ffmat/errors.hpp"
#include "ffmat/primes.hpp"
#include "ffmat/statistics.hpp"

using namespace ffmat;
using namespace ffmat::stats;

namespace {

// Fraction of k x (k+1) matrices over Z/q whose k x k minors all vanish mod q,
// by enumerating every matrix.
Rational enumerate_divisible_minors(unsigned q, unsigned k) {
  const unsigned cells = k * (k + 1);
  std::vector<unsigned> m(cells, 0);
  unsigned long hits = 0, total = 0;
  auto det_mod = [&](unsigned skip) {
    // k <= 3, cofactor expansion on the columns other than `skip`.
    std::vector<long> a;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j <= k; ++j)
        if (j != skip) a.push_back(m[i * (k + 1) + j]);
    long d = 0;
    if (k == 1) d = a[0];
    if (k == 2) d = a[0] * a[3] - a[1] * a[2];
    if (k == 3) {
      d = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
          a[2] * (a[3] * a[7] - a[4] * a[6]);
    }
    return ((d % static_cast<long>(q)) + q) % q;
  };
  while (true) {
    ++total;
    bool all = true;
    for (unsigned skip = 0; skip <= k && all; ++skip) all = det_mod(skip) == 0;
    hits += all;
    unsigned c = 0;
    while (c < cells && ++m[c] == q) m[c++] = 0;
    if (c == cells) break;
  }
  Rational out(hits, total);
  out.canonicalize();
  return out;
}

Rational q_binomial_pascal(unsigned n, unsigned k, const Rational& q) {
  if (k == 0 || k == n) return Rational(1);
  if (k > n) return Rational(0);
  Rational qk(1);
  for (unsigned i = 0; i < k; ++i) qk *= q;
  return q_binomial_pascal(n - 1, k - 1, q) + qk * q_binomial_pascal(n - 1, k, q);
}

}  // namespace

TEST_CASE("q-Pochhammer and q-binomial") {
  const Rational half(1, 2);
  CHECK(q_pochhammer(half, half, 0) == 1);
  CHECK(q_pochhammer(half, half, 2) == Rational(3, 8));
  for (unsigned n = 0; n <= 7; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) {
      CHECK(q_binomial(n, k, Rational(1, 3)) == q_binomial_pascal(n, k, Rational(1, 3)));
    }
}

TEST_CASE("P_{p,j,k} matches exhaustive enumeration") {
  CHECK(prob_minors_divisible_exact(2, 1, 1) == enumerate_divisible_minors(2, 1));
  CHECK(prob_minors_divisible_exact(3, 1, 1) == enumerate_divisible_minors(3, 1));
  CHECK(prob_minors_divisible_exact(2, 1, 2) == enumerate_divisible_minors(2, 2));
  CHECK(prob_minors_divisible_exact(3, 1, 2) == enumerate_divisible_minors(3, 2));
  CHECK(prob_minors_divisible_exact(2, 2, 2) == enumerate_divisible_minors(4, 2));
  CHECK(prob_minors_divisible_exact(2, 1, 3) == enumerate_divisible_minors(2, 3));
  CHECK(prob_minors_divisible_exact(2, 2, 1) == enumerate_divisible_minors(4, 1));
  CHECK(prob_minors_divisible_exact(2, 1, 1) == Rational(1, 4));
  CHECK_THROWS_AS(prob_minors_divisible_exact(4, 1, 1), DomainError);
  CHECK_THROWS_AS(prob_minors_divisible_exact(2, 0, 1), DomainError);
  CHECK_THROWS_AS(prob_minors_divisible_exact(2, 1, 0), DomainError);
}

TEST_CASE("P_{p,j,k} approaches its limit") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned j : {1u, 2u, 3u}) {
      CHECK(prob_minors_divisible(p, j, 60) == doctest::Approx(prob_minors_divisible_limit(p, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("M_{p,k} equals the sum over j of P_{p,j,k}") {
  for (std::uint64_t p : {2, 3, 7}) {
    for (unsigned k = 1; k <= 5; ++k) {
      Rational sum(0);
      for (unsigned j = 1; j <= 80; ++j) sum += prob_minors_divisible_exact(p, j, k);
      const Rational diff = expected_multiplicity_exact(p, k) - sum;
      CHECK(std::abs(diff.get_d()) < 1e-15);
      CHECK(static_cast<double>(expected_multiplicity_fast(p, k)) ==
            doctest::Approx(expected_multiplicity(p, k)).epsilon(1e-14));
    }
    double limit_sum = 0;
    for (unsigned j = 1; j <= 80; ++j) limit_sum += prob_minors_divisible_limit(p, j);
    CHECK(expected_multiplicity_limit(p) == doctest::Approx(limit_sum).epsilon(1e-10));
    CHECK(static_cast<double>(expected_multiplicity_limit_fast(p)) ==
          doctest::Approx(expected_multiplicity_limit(p)).epsilon(1e-13));
  }
  CHECK(expected_multiplicity_exact(2, 0) == 0);
  CHECK(expected_multiplicity_fast(101, 0) == 0);
  // Large primes: the fast forms stay close to 1/p^2, no cancellation.
  const long double big = 999983.0L;
  CHECK(static_cast<double>(expected_multiplicity_limit_fast(999983) * big * big) ==
        doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("expected factor count") {
  SeriesConfig cfg;
  cfg.prime_cutoff = 10000;
  double oracle = 0;
  for (std::uint64_t p : primes_up_to(cfg.prime_cutoff)) oracle += 1.0 / (double(p) * double(p) - 1.0);
  CHECK(expected_factor_count(2, cfg) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(extra_statistical_factors(2, 1, cfg) == doctest::Approx(oracle).epsilon(1e-12));
  for (unsigned n = 3; n <= 8; ++n) {
    double step = 0;
    for (std::uint64_t p : primes_up_to(cfg.prime_cutoff))
      step += expected_multiplicity(p, n - 2) + 1.0 / (std::pow(double(p), double(n)) - 1.0);
    CHECK(expected_factor_count(n, cfg) - expected_factor_count(n - 1, cfg) ==
          doctest::Approx(step).epsilon(1e-9));
  }
  CHECK_THROWS_AS(expected_factor_count(1), DomainError);
  CHECK_THROWS_AS(extra_statistical_factors(3, 3), DomainError);
  CHECK_THROWS_AS(extra_statistical_factors(3, 0), DomainError);
}

TEST_CASE("zeta(3) and the gcd-ratio constant") {
  double direct = 0;
  for (int n = 1; n <= 100000; ++n) direct += 1.0 / (double(n) * n * n);
  direct += 1.0 / (2.0 * 100000.0 * 100000.0);  // tail ~ 1/(2N^2)
  CHECK(zeta3() == doctest::Approx(direct).epsilon(1e-13));
  CHECK(gcd_ratio_constant() == doctest::Approx(1.0 - 6.0 * direct / (std::numbers::pi * std::numbers::pi)).epsilon(1e-12));
}
