#include <random>
#include <utility>

#include "ffmat/errors.hpp"
#include "ffmat/primes.hpp"

namespace ffmat {
namespace {

constexpr std::uint64_t kTrialLimit = 100000;
constexpr std::uint64_t kRhoSeed = 0x42;

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> table = primes_up_to(kTrialLimit);
  return table;
}

bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned s, const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt n_minus_one = n - 1;
  if (x == 1 || x == n_minus_one) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_one) return true;
    if (x == 1) return false;
  }
  return false;
}

BigInt brent_rho(const BigInt& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  const std::uint64_t bound = n.fits_ulong_p() ? n.get_ui() - 1 : ~std::uint64_t{0};
  std::uniform_int_distribution<std::uint64_t> draw(1, bound);
  for (;;) {
    const BigInt c(static_cast<unsigned long>(draw(rng)));
    BigInt y(static_cast<unsigned long>(draw(rng)));
    BigInt g(1), q(1), x, ys;
    const unsigned long block = 128;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min(block, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      // The batched product overshot; step back one iteration at a time.
      do {
        ys = (ys * ys + c) % n;
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const BigInt& n, PrimeFactorization& out, std::mt19937_64& rng) {
  if (n == 1) return;
  // No factor below kTrialLimit remains, so anything below its square is prime.
  if (n < BigInt(kTrialLimit) * kTrialLimit || is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = brent_rho(n, rng);
  factor_large(d, out, rng);
  factor_large(BigInt(n / d), out, rng);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit < 2) throw DomainError("primes_up_to requires limit >= 2");
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_probable_prime(const BigInt& n, int rounds) {
  if (n < 2) return false;
  const auto& primes = small_primes();
  for (int i = 0; i < rounds && i < static_cast<int>(primes.size()); ++i) {
    if (n == primes[i]) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), primes[i])) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (int i = 0; i < rounds; ++i) {
    if (!strong_probable_prime(n, d, s, BigInt(static_cast<unsigned long>(primes[i])))) return false;
  }
  return true;
}

PrimeFactorization factor_integer(const BigInt& n) {
  if (sgn(n) == 0) throw DomainError("cannot factor zero");
  PrimeFactorization out;
  BigInt rest = abs(n);
  for (std::uint64_t p : small_primes()) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) {
      ++out[rest];
      return out;
    }
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    if (count > 0) out[BigInt(static_cast<unsigned long>(p))] += count;
  }
  std::mt19937_64 rng(kRhoSeed);
  factor_large(rest, out, rng);
  return out;
}

std::size_t total_multiplicity(const PrimeFactorization& f) {
  std::size_t total = 0;
  for (const auto& [p, m] : f) total += m;
  return total;
}

BigInt multiply_out(const PrimeFactorization& f) {
  BigInt product(1);
  for (const auto& [p, m] : f) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), m);
    product *= power;
  }
  return product;
}

}  // namespace ffmat
