#include "qga/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qga {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

} // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw std::invalid_argument("pow_mod: zero modulus");
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit with the witness set below
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  auto fac = factorize(n);
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : fac) {
    std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) {
    r -= r / p;
    (void)e;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(a % mod);
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t find_split_prime(std::uint64_t e, std::uint64_t lower) {
  if (e == 0) throw std::invalid_argument("find_split_prime: e == 0");
  // candidates are 1 + k*e
  for (std::uint64_t k = lower / e;; ++k) {
    std::uint64_t cand = 1 + k * e;
    if (cand > lower && is_prime(cand)) return cand;
  }
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      (void)e;
      if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
  throw std::runtime_error("primitive_root: none found (p not prime?)");
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  auto fac = factorize(n);
  return fac.size() == 1 ? fac[0].first : 0;
}

bool perfect_square_root(std::uint64_t n, std::uint64_t& root) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  for (std::uint64_t c = (r > 1 ? r - 1 : 0); c <= r + 1; ++c) {
    if (c * c == n) { root = c; return true; }
  }
  return false;
}

} // namespace qga
