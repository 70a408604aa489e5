#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charkern/chartab.hpp"
#include "charkern/group.hpp"

namespace charkern {

struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// The two GCP criteria are provably equivalent; disagreement means a bug here.
struct MethodDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};

// Kernel-derived data of one character table. kern holds the distinct kernels
// of the non-linear rows; kern_char_count[i] is how many rows share kern[i].
struct KernelProfile {
  std::vector<Subgroup> kern;                 // sorted by (order, members)
  std::vector<std::uint32_t> kern_char_count;
  std::vector<std::uint64_t> sk;   // distinct |ker chi| over all rows, ascending
  std::vector<std::uint64_t> skn;  // the same over non-linear rows
  std::vector<std::uint64_t> cd;   // distinct degrees, ascending
  // largest m with p^m in skn; absent when the group is abelian or |G| is
  // not a prime power
  std::optional<int> m_max;
};

KernelProfile kernel_profile(GroupPtr g, const CharacterTable& t);

// every non-linear row vanishes everywhere outside its character center;
// throws NotApplicable for abelian groups
bool is_gvz(GroupPtr g, const CharacterTable& t);

// Two independent criteria for "(G, N) is a character-vanishing pair":
//   A. every non-linear row vanishes on every class outside N;
//   B. for every g outside N, the class of g is exactly the coset g*G'.
// Returns A after asserting A == B (throws MethodDisagreement otherwise).
// N must be normal.
bool is_gcp(GroupPtr g, const Subgroup& n, const CharacterTable& t);

// (strong, weak) quantified over the full normal-subgroup list:
//   strong: every normal N has G' <= N or N <= Z(G)
//   weak:   every normal N has G' <= N or |NZ(G)/Z(G)| <= p
std::pair<bool, bool> check_strong_weak(GroupPtr g, const std::vector<Subgroup>& normals);

// no two distinct members of kern are comparable; throws NotApplicable for
// abelian groups
bool is_j_group(GroupPtr g, const KernelProfile& profile);

// (m, n): m = |kern|, n = #{normal N : G' not <= N}. G itself never counts;
// the trivial subgroup counts whenever G is non-abelian. Throws NotApplicable
// for abelian groups.
std::pair<std::uint64_t, std::uint64_t> k_mn(GroupPtr g, const KernelProfile& profile,
                                             const std::vector<Subgroup>& normals);

struct UniqueNormalResult {
  std::optional<Subgroup> unique;  // set iff count == 1
  std::uint64_t count = 0;
};
UniqueNormalResult unique_normal_of_order(GroupPtr g, const std::vector<Subgroup>& normals,
                                          std::uint64_t size);

// Everything the reports carry. The optionals are absent for abelian groups,
// where the defining quantifier (over non-linear characters) is empty.
struct PredicateProfile {
  std::optional<bool> gvz;
  std::optional<bool> gcp_with_center;
  bool strong_condition = true;
  bool weak_condition = true;
  std::optional<bool> j_group;
  std::optional<std::uint64_t> k_m, k_n;
  bool elementary_abelian_center = false;
  std::map<std::uint64_t, std::uint64_t> normal_order_counts;  // order -> count
};

PredicateProfile predicate_profile(GroupPtr g, const CharacterTable& t,
                                   const KernelProfile& kp,
                                   const std::vector<Subgroup>& normals);

}  // namespace charkern
