#include <doctest.h>

#include "charkern/numeric.hpp"

using namespace charkern;

TEST_CASE("gcd and lcm basics") {
  CHECK(gcd_u64(12, 18) == 6);
  CHECK(gcd_u64(0, 7) == 7);
  CHECK(gcd_u64(7, 0) == 7);
  CHECK(gcd_u64(1, 1) == 1);
  CHECK(lcm_u64(4, 6) == 12);
  CHECK(lcm_u64(9, 27) == 27);
  // gcd * lcm = product, for coprime and non-coprime pairs
  for (std::uint64_t a = 1; a <= 30; ++a)
    for (std::uint64_t b = 1; b <= 30; ++b) CHECK(gcd_u64(a, b) * lcm_u64(a, b) == a * b);
}

TEST_CASE("primality by exhaustive cross-check") {
  auto naive = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == naive(n));
  CHECK(is_prime(11251));  // the field modulus used for exponent-625 lifts
  CHECK(!is_prime(1));
}

TEST_CASE("factorization multiplies back and has prime factors") {
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    auto f = factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t prev = 0;
    for (auto [p, e] : f) {
      CHECK(is_prime(p));
      CHECK(p > prev);  // ascending, distinct
      prev = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("prime power detection") {
  auto pp = prime_power(729);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 3);
  CHECK(pp->n == 6);
  pp = prime_power(625);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 5);
  CHECK(pp->n == 4);
  CHECK(!prime_power(1).has_value());
  CHECK(!prime_power(12).has_value());
  CHECK(!prime_power(0).has_value());
  pp = prime_power(2);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 2);
  CHECK(pp->n == 1);
}

TEST_CASE("integer square root is exact floor") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    std::uint64_t r = isqrt_u64(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt_u64(81) == 9);
  CHECK(isqrt_u64(80) == 8);
}

TEST_CASE("modular arithmetic round trips") {
  const std::uint64_t q = 11251;
  for (std::uint64_t a = 1; a < 200; ++a) {
    CHECK(a * inv_mod(a, q) % q == 1);
    CHECK(pow_mod(a, q - 1, q) == 1);  // Fermat
  }
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(pow_u64(3, 6) == 729);
  CHECK(pow_u64(5, 0) == 1);
}

TEST_CASE("divisors are complete and ascending") {
  auto d = divisors(36);
  CHECK(d == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  d = divisors(729);
  CHECK(d == std::vector<std::uint64_t>{1, 3, 9, 27, 81, 243, 729});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
}
