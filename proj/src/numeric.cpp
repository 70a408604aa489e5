#include "charkern/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace charkern {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::max(0.0, std::floor(std::sqrt(static_cast<double>(n)))));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<PrimePower> prime_power(std::uint64_t order) {
  if (order < 2) return std::nullopt;
  auto f = factorize(order);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) throw std::invalid_argument("inv_mod: zero");
  return pow_mod(a, q - 2, q);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
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

}  // namespace charkern
