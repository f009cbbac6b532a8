#include <doctest.h>

#include <random>

#include "ffmat/errors.hpp"
#include "ffmat/primes.hpp"

using namespace ffmat;

TEST_CASE("sieve") {
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1000000).size() == 78498);
  CHECK_THROWS_AS(primes_up_to(1), DomainError);
}

TEST_CASE("primality agrees with GMP") {
  std::mt19937_64 rng(3);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(17);
  for (int t = 0; t < 2000; ++t) {
    const BigInt n = t < 1000 ? BigInt(static_cast<unsigned long>(t)) : BigInt(gen.get_z_bits(90));
    CHECK(is_probable_prime(n) == (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0));
  }
  // Strong pseudoprimes to small bases.
  CHECK_FALSE(is_probable_prime(BigInt("3215031751")));
  CHECK_FALSE(is_probable_prime(BigInt("3825123056546413051")));
  CHECK(is_probable_prime(BigInt("48931121")));
}

TEST_CASE("factorization multiplies back and has prime factors") {
  CHECK(factor_integer(BigInt(1)).empty());
  CHECK(factor_integer(BigInt("11988124645")) == PrimeFactorization{{5, 1}, {7, 2}, {48931121, 1}});
  CHECK(total_multiplicity(factor_integer(BigInt(-360))) == 6);
  CHECK_THROWS_AS(factor_integer(BigInt(0)), DomainError);

  gmp_randclass gen(gmp_randinit_default);
  gen.seed(23);
  for (int t = 0; t < 60; ++t) {
    // At most one factor above 40 bits, so rho stays fast.
    BigInt n = gen.get_z_bits(10 + t) + 2;
    for (int f = 0; f < t % 4; ++f) {
      BigInt q;
      const BigInt seed = gen.get_z_bits(20 + f * 6);
      mpz_nextprime(q.get_mpz_t(), seed.get_mpz_t());
      n *= q;
    }
    const PrimeFactorization f = factor_integer(n);
    CHECK(multiply_out(f) == n);
    for (const auto& [p, m] : f) CHECK(mpz_probab_prime_p(p.get_mpz_t(), 40) != 0);
  }
  // Two 40-bit primes: beyond trial division, needs rho.
  const BigInt p("1099511627791"), q("1099511628401");
  CHECK(factor_integer(p * q) == PrimeFactorization{{p, 1}, {q, 1}});
}
