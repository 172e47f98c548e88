#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qga {

bool is_prime(std::uint64_t n);

// prime factorization as (prime, exponent) pairs, primes ascending
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n); // ascending, includes 1 and n

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod); // gcd(a, mod) == 1

// smallest prime p with p ≡ 1 (mod e) and p > lower
std::uint64_t find_split_prime(std::uint64_t e, std::uint64_t lower);

std::uint64_t primitive_root(std::uint64_t p); // p prime

// if n == p^k for prime p, returns p; otherwise 0.  n >= 2
std::uint64_t prime_power_base(std::uint64_t n);

// true and sets root when n is a perfect square
bool perfect_square_root(std::uint64_t n, std::uint64_t& root);

} // namespace qga
