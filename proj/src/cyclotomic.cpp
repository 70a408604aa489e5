#include "charkern/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "charkern/numeric.hpp"

namespace charkern {

std::uint64_t euler_phi(std::uint64_t e) {
  std::uint64_t r = e;
  for (auto [p, k] : factorize(e)) r = r / p * (p - 1);
  return r;
}

namespace {

// exact division of polynomials with int64 coefficients (remainder must be 0)
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
  if (den.empty() || den.back() != 1) throw std::invalid_argument("poly_div_exact: divisor not monic");
  std::vector<std::int64_t> quo(num.size() - den.size() + 1, 0);
  for (std::size_t i = quo.size(); i-- > 0;) {
    std::int64_t c = num[i + den.size() - 1];
    quo[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (auto v : num)
    if (v != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quo;
}

std::vector<std::int64_t> cyclotomic_uncached(std::uint64_t e) {
  // x^e - 1 divided by Phi_d for all proper divisors d of e
  std::vector<std::int64_t> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (auto d : divisors(e)) {
    if (d == e) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t e) {
  if (e == 0) throw std::invalid_argument("cyclotomic_polynomial: e must be positive");
  static std::mutex mtx;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  auto val = cyclotomic_uncached(e);
  std::lock_guard<std::mutex> lk(mtx);
  cache.emplace(e, val);
  return val;
}

CycInt cyc_zero(std::uint64_t e) {
  CycInt z;
  z.e = e;
  z.c.assign(euler_phi(e), BigInt(0));
  return z;
}

std::vector<BigInt> reduce_mod_cyclotomic(std::vector<BigInt> poly, std::uint64_t e) {
  const auto phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;  // = euler_phi(e)
  if (poly.size() < deg) poly.resize(deg, BigInt(0));
  for (std::size_t i = poly.size(); i-- > deg;) {
    BigInt c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
  }
  poly.resize(deg);
  return poly;
}

std::vector<std::int64_t> reduce_mod_cyclotomic_i64(std::vector<std::int64_t> poly, std::uint64_t e) {
  const auto phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  if (poly.size() < deg) poly.resize(deg, 0);
  for (std::size_t i = poly.size(); i-- > deg;) {
    std::int64_t c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
  }
  poly.resize(deg);
  return poly;
}

CycInt cyc_from_int(std::uint64_t e, const BigInt& v) {
  CycInt z = cyc_zero(e);
  if (!z.c.empty()) z.c[0] = v;
  else if (v != 0) throw std::logic_error("cyc_from_int: phi(e) = 0");
  return z;
}

CycInt cyc_zeta_pow(std::uint64_t e, std::uint64_t j) {
  j %= e;
  std::vector<BigInt> poly(j + 1, BigInt(0));
  poly[j] = 1;
  CycInt z;
  z.e = e;
  z.c = reduce_mod_cyclotomic(std::move(poly), e);
  return z;
}

CycInt cyc_from_mult(std::uint64_t e,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& jm) {
  std::vector<BigInt> poly(e, BigInt(0));
  for (auto [j, m] : jm) poly[j % e] += m;
  CycInt z;
  z.e = e;
  z.c = reduce_mod_cyclotomic(std::move(poly), e);
  return z;
}

namespace {
void check_same_ring(const CycInt& a, const CycInt& b) {
  if (a.e != b.e) throw std::invalid_argument("CycInt: mixed cyclotomic rings");
}
}  // namespace

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  check_same_ring(a, b);
  CycInt z = a;
  for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] += b.c[i];
  return z;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  check_same_ring(a, b);
  CycInt z = a;
  for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] -= b.c[i];
  return z;
}

CycInt cyc_neg(const CycInt& a) {
  CycInt z = a;
  for (auto& v : z.c) v = -v;
  return z;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  check_same_ring(a, b);
  std::vector<BigInt> prod(a.c.size() + b.c.size(), BigInt(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] != 0) prod[i + j] += a.c[i] * b.c[j];
    }
  }
  CycInt z;
  z.e = a.e;
  z.c = reduce_mod_cyclotomic(std::move(prod), a.e);
  return z;
}

CycInt cyc_conj(const CycInt& a) {
  std::vector<BigInt> poly(a.e, BigInt(0));
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] != 0) poly[(a.e - k) % a.e] += a.c[k];
  }
  CycInt z;
  z.e = a.e;
  z.c = reduce_mod_cyclotomic(std::move(poly), a.e);
  return z;
}

bool cyc_is_zero(const CycInt& a) {
  for (const auto& v : a.c)
    if (v != 0) return false;
  return true;
}

bool cyc_eq(const CycInt& a, const CycInt& b) {
  check_same_ring(a, b);
  return a.c == b.c;
}

CycInt cyc_embed(const CycInt& a, std::uint64_t e2) {
  if (e2 % a.e != 0) throw std::invalid_argument("cyc_embed: source exponent must divide target");
  if (e2 == a.e) return a;
  const std::uint64_t stride = e2 / a.e;
  std::vector<BigInt> poly(e2, BigInt(0));
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] != 0) poly[k * stride] += a.c[k];
  }
  CycInt z;
  z.e = e2;
  z.c = reduce_mod_cyclotomic(std::move(poly), e2);
  return z;
}

std::uint64_t cyc_eval_mod(const CycInt& a, std::uint64_t q, std::uint64_t omega) {
  // Horner at x = omega; coefficients reduced into [0, q)
  std::uint64_t acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    BigInt r = a.c[i] % static_cast<std::int64_t>(q);
    if (r < 0) r += static_cast<std::int64_t>(q);
    acc = (acc * omega + static_cast<std::uint64_t>(r)) % q;
  }
  return acc;
}

namespace {
ModField field_from_q(std::uint64_t q, std::uint64_t e) {
  ModField f;
  f.q = q;
  f.e = e;
  if (e == 1) {
    f.omega = 1;
    return f;
  }
  auto fac = factorize(e);
  for (std::uint64_t t = 2; t < q; ++t) {
    std::uint64_t w = pow_mod(t, (q - 1) / e, q);
    if (w == 1) continue;
    bool exact = true;
    for (auto [p, k] : fac) {
      if (pow_mod(w, e / p, q) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) {
      f.omega = w;
      return f;
    }
  }
  throw std::logic_error("choose_field: no element of exact order e (q not prime?)");
}
}  // namespace

namespace {
// q > 2*sqrt(|G|), exactly: q^2 > 4|G|
bool q_large_enough(std::uint64_t q, std::uint64_t group_order) {
  return q * q > 4 * group_order;
}

std::uint64_t next_valid_q(std::uint64_t q, std::uint64_t e, std::uint64_t group_order) {
  while (!q_large_enough(q, group_order) || (q - 1) % e != 0 || !is_prime(q)) {
    ++q;
    if (q > (std::uint64_t(1) << 31)) throw std::logic_error("field search ran away");
  }
  return q;
}
}  // namespace

ModField choose_field(std::uint64_t group_order, std::uint64_t exponent) {
  return field_from_q(next_valid_q(2, exponent, group_order), exponent);
}

ModField next_field(const ModField& f, std::uint64_t group_order) {
  return field_from_q(next_valid_q(f.q + 1, f.e, group_order), f.e);
}

}  // namespace charkern
