#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace charkern {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// trial division; fine for the desk-scale orders and field moduli used here
bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t isqrt_u64(std::uint64_t n);  // floor(sqrt(n))

struct PrimePower {
  std::uint64_t p;
  int n;
};
// order = p^n with n >= 1; nullopt for order 1 or mixed orders
std::optional<PrimePower> prime_power(std::uint64_t order);

std::uint64_t pow_u64(std::uint64_t base, int exp);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);  // q prime, a not divisible by q

// all positive divisors, ascending
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace charkern
