#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

namespace charkern {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t euler_phi(std::uint64_t e);

// Phi_e as ascending coefficients, size phi(e)+1, monic. Computed by exact
// division of x^e - 1 by the proper-divisor cyclotomics; coefficients of the
// orders used here are tiny, int64 is plenty.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t e);

// Element of Z[zeta_e], stored as the canonical residue mod Phi_e:
// c[0] + c[1] x + ... + c[phi(e)-1] x^(phi(e)-1) with x = zeta_e.
// All values of a character table live in one ring: e is the group exponent.
struct CycInt {
  std::uint64_t e = 1;
  std::vector<BigInt> c;
};

CycInt cyc_zero(std::uint64_t e);
CycInt cyc_from_int(std::uint64_t e, const BigInt& v);
CycInt cyc_zeta_pow(std::uint64_t e, std::uint64_t j);
// sum of m * zeta^j over sparse (j, m) pairs
CycInt cyc_from_mult(std::uint64_t e, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& jm);

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_neg(const CycInt& a);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_conj(const CycInt& a);  // zeta -> zeta^(-1)
bool cyc_is_zero(const CycInt& a);
bool cyc_eq(const CycInt& a, const CycInt& b);

// reinterpret in the larger ring Z[zeta_e2], requires e | e2
CycInt cyc_embed(const CycInt& a, std::uint64_t e2);

// reduce an arbitrary-degree polynomial in zeta_e (ascending coeffs) mod Phi_e
std::vector<BigInt> reduce_mod_cyclotomic(std::vector<BigInt> poly, std::uint64_t e);
// int64 fast path for exact inner-product accumulators; the caller guarantees
// |coeff| * (phi height + 1) * (e - phi + 1) stays well inside int64
std::vector<std::int64_t> reduce_mod_cyclotomic_i64(std::vector<std::int64_t> poly, std::uint64_t e);

// evaluation at zeta -> omega in F_q (consistency bridge to the modular side)
std::uint64_t cyc_eval_mod(const CycInt& a, std::uint64_t q, std::uint64_t omega);

// Modular splitting field for the character computation: smallest prime q with
// q = 1 mod e and q > 2*sqrt(order), and omega of exact multiplicative order e.
struct ModField {
  std::uint64_t q = 0;
  std::uint64_t omega = 1;
  std::uint64_t e = 1;
};
ModField choose_field(std::uint64_t group_order, std::uint64_t exponent);
ModField next_field(const ModField& f, std::uint64_t group_order);  // next larger q, same e

}  // namespace charkern
