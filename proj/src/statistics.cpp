#include <cmath>
#include <numbers>
#include <string>

#include "ffmat/errors.hpp"
#include "ffmat/primes.hpp"
#include "ffmat/statistics.hpp"

namespace ffmat::stats {
namespace {

// Terms of the inner q-series below this are dropped in the floating forms;
// they decay like p^(-i(i+1)/2) so this costs at most a handful of terms.
constexpr long double kInnerCutoff = 1e-22L;

void require_prime(std::uint64_t p) {
  if (p < 2 || !is_probable_prime(BigInt(static_cast<unsigned long>(p)))) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
}

BigInt big_pow(std::uint64_t base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

// base^exponent for a possibly negative exponent.
Rational rational_pow(std::uint64_t base, long exponent) {
  if (exponent >= 0) return Rational(big_pow(base, static_cast<unsigned long>(exponent)));
  return Rational(BigInt(1), big_pow(base, static_cast<unsigned long>(-exponent)));
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace

Rational q_pochhammer(const Rational& a, const Rational& q, unsigned k) {
  Rational out(1);
  Rational term = a;
  for (unsigned i = 0; i < k; ++i) {
    out *= 1 - term;
    term *= q;
  }
  return out;
}

Rational q_binomial(unsigned n, unsigned k, const Rational& q) {
  if (k > n) return Rational(0);
  Rational num(1), den(1);
  for (unsigned i = 0; i < k; ++i) {
    Rational qn(1), qk(1);
    mpz_pow_ui(qn.get_num_mpz_t(), q.get_num_mpz_t(), n - i);
    mpz_pow_ui(qn.get_den_mpz_t(), q.get_den_mpz_t(), n - i);
    mpz_pow_ui(qk.get_num_mpz_t(), q.get_num_mpz_t(), i + 1);
    mpz_pow_ui(qk.get_den_mpz_t(), q.get_den_mpz_t(), i + 1);
    num *= 1 - qn;
    den *= 1 - qk;
  }
  Rational out = num / den;
  out.canonicalize();
  return out;
}

Rational prob_minors_divisible_exact(std::uint64_t p, unsigned j, unsigned k) {
  require_prime(p);
  if (j < 1 || k < 1) throw DomainError("P_{p,j,k} needs j >= 1 and k >= 1");
  const Rational q(BigInt(1), BigInt(static_cast<unsigned long>(p)));
  const Rational pochhammer = q_pochhammer(rational_pow(p, -static_cast<long>(j)), q, k);
  const Rational geometric = Rational(big_pow(p, k) - 1, BigInt(static_cast<unsigned long>(p - 1)));
  const Rational prefactor = 1 + rational_pow(p, 1 - static_cast<long>(j) - static_cast<long>(k)) * geometric;
  Rational out = 1 - prefactor * pochhammer;
  out.canonicalize();
  return out;
}

double prob_minors_divisible(std::uint64_t p, unsigned j, unsigned k) {
  return to_double(prob_minors_divisible_exact(p, j, k));
}

double prob_minors_divisible_limit(std::uint64_t p, unsigned j, const SeriesConfig& cfg) {
  require_prime(p);
  if (j < 1) throw DomainError("P_{p,j,inf} needs j >= 1");
  const long double base = static_cast<long double>(p);
  long double pochhammer = 1.0L;
  long double term = std::pow(base, -static_cast<long double>(j));
  while (term >= cfg.series_tolerance) {
    pochhammer *= 1.0L - term;
    term /= base;
  }
  pochhammer *= 1.0L - term;
  const long double prefactor = 1.0L + std::pow(base, 1.0L - j) / (base - 1.0L);
  return static_cast<double>(1.0L - prefactor * pochhammer);
}

Rational expected_multiplicity_exact(std::uint64_t p, unsigned k) {
  require_prime(p);
  const Rational q(BigInt(1), BigInt(static_cast<unsigned long>(p)));
  Rational sum(0);
  for (unsigned i = 1; i <= k; ++i) {
    const BigInt denominator =
        big_pow(p, static_cast<unsigned long>(i) * (i - 1) / 2) * (big_pow(p, i) - 1);
    Rational term = q_binomial(k, i, q) / Rational(denominator);
    if (i % 2 == 0) term = -term;
    sum += term;
  }
  sum += Rational(BigInt(1), big_pow(p, k + 1) - 1);
  sum -= Rational(BigInt(1), BigInt(static_cast<unsigned long>(p - 1)));
  sum.canonicalize();
  return sum;
}

double expected_multiplicity(std::uint64_t p, unsigned k) {
  return to_double(expected_multiplicity_exact(p, k));
}

double expected_multiplicity_limit(std::uint64_t p, const SeriesConfig& cfg) {
  require_prime(p);
  Rational sum(0);
  Rational product(1);  // prod_{s<=i} (1 - p^-s)
  for (unsigned i = 1;; ++i) {
    product *= 1 - rational_pow(p, -static_cast<long>(i));
    const BigInt scale =
        big_pow(p, static_cast<unsigned long>(i) * (i - 1) / 2) * (big_pow(p, i) - 1);
    Rational term = 1 / (Rational(scale) * product);
    if (i % 2 == 0) term = -term;
    sum += term;
    if (std::abs(term.get_d()) < cfg.series_tolerance) break;
  }
  sum -= Rational(BigInt(1), BigInt(static_cast<unsigned long>(p - 1)));
  return to_double(sum);
}

long double expected_multiplicity_fast(std::uint64_t p, unsigned k) {
  if (k == 0) return 0.0L;
  const long double base = static_cast<long double>(p);
  const long double q = 1.0L / base;
  long double sum = (1.0L - std::pow(base, 1.0L - k)) / ((base - 1.0L) * (base - 1.0L)) +
                    1.0L / (std::pow(base, k + 1.0L) - 1.0L);
  // [k choose i]_q built up from [k choose 1]_q.
  long double binom = (1.0L - std::pow(q, k)) / (1.0L - q);
  for (unsigned i = 2; i <= k; ++i) {
    binom *= (1.0L - std::pow(q, k - i + 1.0L)) / (1.0L - std::pow(q, i));
    const long double magnitude =
        binom / (std::pow(base, i * (i - 1.0L) / 2.0L) * (std::pow(base, i) - 1.0L));
    sum += i % 2 == 0 ? -magnitude : magnitude;
    if (magnitude < kInnerCutoff) break;
  }
  return sum;
}

long double expected_multiplicity_limit_fast(std::uint64_t p) {
  const long double base = static_cast<long double>(p);
  long double sum = 1.0L / ((base - 1.0L) * (base - 1.0L));
  long double product = 1.0L - 1.0L / base;
  for (unsigned i = 2;; ++i) {
    product *= 1.0L - std::pow(base, -static_cast<long double>(i));
    const long double magnitude =
        1.0L / (std::pow(base, i * (i - 1.0L) / 2.0L) * (std::pow(base, i) - 1.0L) * product);
    sum += i % 2 == 0 ? -magnitude : magnitude;
    if (magnitude < kInnerCutoff) break;
  }
  return sum;
}

double slope_constant(const SeriesConfig& cfg) {
  long double total = 0.0L;
  for (std::uint64_t p : primes_up_to(cfg.prime_cutoff)) total += expected_multiplicity_limit_fast(p);
  return static_cast<double>(total);
}

double extra_statistical_factors(unsigned n, unsigned k, const SeriesConfig& cfg) {
  if (k < 1 || k + 1 > n) throw DomainError("extra factors need 1 <= k <= n-1");
  const long double exponent = static_cast<long double>(n - k + 1);
  long double total = 0.0L;
  for (std::uint64_t p : primes_up_to(cfg.prime_cutoff)) {
    total += 1.0L / (std::pow(static_cast<long double>(p), exponent) - 1.0L);
  }
  return static_cast<double>(total);
}

double expected_factor_count(unsigned n, const SeriesConfig& cfg) {
  if (n < 2) throw DomainError("expected factor count needs n >= 2");
  long double total = 0.0L;
  for (std::uint64_t p : primes_up_to(cfg.prime_cutoff)) {
    const long double base = static_cast<long double>(p);
    for (unsigned k = 0; k + 2 <= n; ++k) {
      total += expected_multiplicity_fast(p, k) + 1.0L / (std::pow(base, k + 2.0L) - 1.0L);
    }
  }
  return static_cast<double>(total);
}

double zeta3() {
  // zeta(3) = 5/2 * sum_{n>=1} (-1)^(n+1) / (n^3 * C(2n, n))
  long double sum = 0.0L;
  long double central = 1.0L;  // C(2n, n)
  for (unsigned n = 1; n <= 40; ++n) {
    central *= 2.0L * (2.0L * n - 1.0L) / n;
    const long double term = 1.0L / (static_cast<long double>(n) * n * n * central);
    sum += n % 2 == 1 ? term : -term;
  }
  return static_cast<double>(2.5L * sum);
}

double gcd_ratio_constant() {
  return 1.0 - 6.0 * zeta3() / (std::numbers::pi * std::numbers::pi);
}

}  // namespace ffmat::stats
