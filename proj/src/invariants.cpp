#include "charkern/invariants.hpp"

#include <algorithm>
#include <set>

#include "charkern/numeric.hpp"

namespace charkern {

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

}  // namespace

KernelProfile kernel_profile(GroupPtr g, const CharacterTable& t) {
  KernelProfile kp;
  std::set<std::uint64_t> sk, skn, cd;
  std::map<std::vector<std::uint32_t>, std::uint32_t> kern_count;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    auto ker = kernel_of(t, r);
    sk.insert(ker.order());
    cd.insert(t.rows[r].degree);
    if (t.rows[r].degree > 1) {
      skn.insert(ker.order());
      kern_count[ker.members]++;
    }
  }
  for (auto& [members, count] : kern_count) {
    Subgroup s;
    s.parent = g;
    s.members = members;
    s.normal = true;
    kp.kern.push_back(std::move(s));
    kp.kern_char_count.push_back(count);
  }
  // map iteration is lexicographic by member list; redo as (order, members)
  {
    std::vector<std::size_t> idx(kp.kern.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return subgroup_less(kp.kern[a], kp.kern[b]); });
    KernelProfile tmp;
    for (auto i : idx) {
      tmp.kern.push_back(std::move(kp.kern[i]));
      tmp.kern_char_count.push_back(kp.kern_char_count[i]);
    }
    kp.kern = std::move(tmp.kern);
    kp.kern_char_count = std::move(tmp.kern_char_count);
  }
  kp.sk.assign(sk.begin(), sk.end());
  kp.skn.assign(skn.begin(), skn.end());
  kp.cd.assign(cd.begin(), cd.end());
  if (!kp.skn.empty()) {
    // the exponent m only makes sense for prime-power order; leave it unset
    // otherwise so callers on general groups still get the raw profile
    if (auto pp = prime_power(g->n)) {
      std::uint64_t top = kp.skn.back();
      int m = 0;
      while (top > 1 && top % pp->p == 0) {
        top /= pp->p;
        ++m;
      }
      if (top == 1) kp.m_max = m;
    }
  }
  return kp;
}

bool is_gvz(GroupPtr g, const CharacterTable& t) {
  if (is_abelian(*g)) throw NotApplicable("vanishing-off-center is defined for non-abelian groups");
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    if (t.rows[r].degree == 1) continue;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      const auto& jm = t.rows[r].mult[c];
      const bool on_center = jm.size() == 1 && jm[0].second == t.rows[r].degree;
      if (!on_center && !vanishes_at(t, r, c)) return false;
    }
  }
  return true;
}

bool is_gcp(GroupPtr g, const Subgroup& n, const CharacterTable& t) {
  if (!n.normal && !is_normal_set(*g, n.members))
    throw NotNormalError("vanishing-pair test needs a normal subgroup");

  auto in_n = member_mask(g->n, n.members);
  auto test = [&](const std::vector<std::uint64_t>& mask, std::uint32_t x) {
    return (mask[x >> 6] >> (x & 63)) & 1;
  };

  // A: all non-linear rows vanish on every class outside N
  bool a = true;
  for (std::size_t r = 0; r < t.num_rows() && a; ++r) {
    if (t.rows[r].degree == 1) continue;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      if (test(in_n, t.classes.classes[c].rep)) continue;
      if (!vanishes_at(t, r, c)) {
        a = false;
        break;
      }
    }
  }

  // B: outside N every class is a full coset of G'
  bool b = true;
  auto gp = derived_subgroup(g);
  auto in_gp = member_mask(g->n, gp.members);
  for (const auto& cls : t.classes.classes) {
    if (test(in_n, cls.rep)) continue;
    if (cls.members.size() != gp.members.size()) {
      b = false;
      break;
    }
    const std::uint32_t rinv = g->inv[cls.rep];
    bool coset = true;
    for (auto x : cls.members) {
      if (!test(in_gp, g->at(rinv, x))) {
        coset = false;
        break;
      }
    }
    if (!coset) {
      b = false;
      break;
    }
  }

  if (a != b) throw MethodDisagreement("vanishing criterion and coset criterion disagree");
  return a;
}

std::pair<bool, bool> check_strong_weak(GroupPtr g, const std::vector<Subgroup>& normals) {
  auto gp = derived_subgroup(g);
  auto z = center(g);
  auto pp = prime_power(g->n);
  const std::uint64_t p = pp ? pp->p : 1;
  bool strong = true, weak = true;
  for (const auto& n : normals) {
    if (subgroup_le(gp, n)) continue;
    if (!subgroup_le(n, z)) strong = false;
    // |NZ/Z| = |N| / |N meet Z|
    const std::uint64_t quot = n.members.size() / intersect(n, z).members.size();
    if (quot > p) weak = false;
    if (!strong && !weak) break;
  }
  return {strong, weak};
}

bool is_j_group(GroupPtr g, const KernelProfile& profile) {
  if (is_abelian(*g)) throw NotApplicable("kernel incidence is defined for non-abelian groups");
  for (std::size_t i = 0; i < profile.kern.size(); ++i)
    for (std::size_t j = 0; j < profile.kern.size(); ++j)
      if (i != j && subgroup_le(profile.kern[i], profile.kern[j])) return false;
  return true;
}

std::pair<std::uint64_t, std::uint64_t> k_mn(GroupPtr g, const KernelProfile& profile,
                                             const std::vector<Subgroup>& normals) {
  if (is_abelian(*g)) throw NotApplicable("the (m, n) pair is defined for non-abelian groups");
  auto gp = derived_subgroup(g);
  std::uint64_t n_count = 0;
  for (const auto& n : normals)
    if (!subgroup_le(gp, n)) ++n_count;
  return {profile.kern.size(), n_count};
}

UniqueNormalResult unique_normal_of_order(GroupPtr g, const std::vector<Subgroup>& normals,
                                          std::uint64_t size) {
  (void)g;
  UniqueNormalResult res;
  for (const auto& n : normals) {
    if (n.members.size() != size) continue;
    ++res.count;
    if (res.count == 1)
      res.unique = n;
    else
      res.unique.reset();
  }
  return res;
}

PredicateProfile predicate_profile(GroupPtr g, const CharacterTable& t, const KernelProfile& kp,
                                   const std::vector<Subgroup>& normals) {
  PredicateProfile pp;
  auto primep = prime_power(g->n);
  const std::uint64_t p = primep ? primep->p : 1;
  const bool abelian = is_abelian(*g);
  if (!abelian) {
    pp.gvz = is_gvz(g, t);
    pp.gcp_with_center = is_gcp(g, center(g), t);
    pp.j_group = is_j_group(g, kp);
    auto [m, n] = k_mn(g, kp, normals);
    pp.k_m = m;
    pp.k_n = n;
  }
  auto [strong, weak] = check_strong_weak(g, normals);
  pp.strong_condition = strong;
  pp.weak_condition = weak;
  pp.elementary_abelian_center = is_elementary_abelian(subgroup_to_group(center(g)), p);
  for (const auto& n : normals) pp.normal_order_counts[n.members.size()]++;
  return pp;
}

}  // namespace charkern
