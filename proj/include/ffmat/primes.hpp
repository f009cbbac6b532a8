#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "ffmat/rings.hpp"

namespace ffmat {

/// prime -> multiplicity.
using PrimeFactorization = std::map<BigInt, unsigned>;

/// All primes <= limit, increasing. Throws DomainError for limit < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Strong-pseudoprime (Miller-Rabin) test using the first `rounds` primes as
/// bases. Deterministic; exact for n < 3.3e24 once rounds >= 13.
bool is_probable_prime(const BigInt& n, int rounds = 64);

/// Complete factorization of |n|: trial division below 1e5, then Brent's
/// variant of Pollard rho with a fixed seed. Throws DomainError for n = 0.
PrimeFactorization factor_integer(const BigInt& n);

/// Number of prime factors counted with multiplicity (big Omega).
std::size_t total_multiplicity(const PrimeFactorization& f);
BigInt multiply_out(const PrimeFactorization& f);

}  // namespace ffmat
