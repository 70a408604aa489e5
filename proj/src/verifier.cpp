#include "charkern/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "charkern/numeric.hpp"

namespace charkern {

const std::vector<std::string>& claim_registry() {
  static const std::vector<std::string> ids = {
      "L2.2",  "L2.3", "L2.4", "L2.5", "L2.6",  "T2.8",  "L2.9",  "L2.10",
      "C2.11", "L2.12", "L2.13", "L2.14", "L2.15", "T2.16", "T2.19", "L2.20",
      "P3.1",  "L3.2", "L3.3", "L3.4", "P3.5",  "P3.6",  "T-MAIN"};
  return ids;
}

bool is_known_claim(const std::string& id) {
  const auto& reg = claim_registry();
  return std::find(reg.begin(), reg.end(), id) != reg.end();
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

GroupBundle make_bundle(std::string name, GroupPtr g) {
  GroupBundle b;
  b.name = std::move(name);
  b.group = g;
  b.table = dixon_character_table(g);
  b.normals = normal_subgroups(g, b.table);
  b.kprof = kernel_profile(g, b.table);
  b.pprof = predicate_profile(g, b.table, b.kprof, b.normals);
  b.zg = center(g);
  b.gp = derived_subgroup(g);
  b.abelian = is_abelian(*g);
  try {
    b.nclass = nilpotency_class(g);
  } catch (const NotNilpotentError&) {
    b.nclass = -1;
  }
  if (auto pp = prime_power(g->n)) {
    b.p = pp->p;
    b.k = pp->n;
  }
  return b;
}

namespace {

struct Outcome {
  Verdict verdict = Verdict::not_applicable;
  ordered_json witness;
  std::string scope_note;
};

Outcome pass() { return {Verdict::pass, {}, ""}; }
Outcome pass_with(ordered_json info) { return {Verdict::pass, std::move(info), ""}; }
Outcome fail(ordered_json witness) { return {Verdict::fail, std::move(witness), ""}; }
Outcome na(std::string note) { return {Verdict::not_applicable, {}, std::move(note)}; }

// biconditional convention: agreeing-true is a pass, agreeing-false is
// recorded as not_applicable ("both-false": no informative instance), and
// disagreement is the counterexample
Outcome biconditional(bool lhs, bool rhs, ordered_json witness) {
  if (lhs && rhs) return pass();
  if (!lhs && !rhs) return na("both-false");
  witness["lhs_holds"] = lhs;
  witness["rhs_holds"] = rhs;
  return fail(std::move(witness));
}

int ilog_exact(std::uint64_t p, std::uint64_t v) {
  int e = 0;
  while (v > 1) {
    if (v % p != 0) return -1;
    v /= p;
    ++e;
  }
  return e;
}

// largest positive m with p^m in skn(G); nullopt when skn has no entry > 1
std::optional<int> largest_positive_m(const GroupBundle& b) {
  if (b.kprof.skn.empty() || b.kprof.skn.back() <= 1) return std::nullopt;
  int m = ilog_exact(b.p, b.kprof.skn.back());
  if (m <= 0) return std::nullopt;
  return m;
}

// m with skn(G) == {p^m} exactly (m = 0 included)
std::optional<int> singleton_m(const GroupBundle& b) {
  if (b.kprof.skn.size() != 1) return std::nullopt;
  int m = ilog_exact(b.p, b.kprof.skn[0]);
  if (m < 0) return std::nullopt;
  return m;
}

ordered_json subgroup_brief(const Subgroup& s) {
  ordered_json j;
  j["order"] = s.members.size();
  constexpr std::size_t cap = 32;
  std::vector<std::uint32_t> head(s.members.begin(),
                                  s.members.begin() + std::min(cap, s.members.size()));
  j["members"] = head;
  if (s.members.size() > cap) j["members_truncated"] = true;
  return j;
}

std::vector<std::uint64_t> abelian_type_of(const Subgroup& s) {
  return abelian_type(subgroup_to_group(s));
}

std::uint64_t exponent_of_subgroup(const Subgroup& s) {
  return exponent_of(*subgroup_to_group(s));
}

bool unique_normal_is_derived(const GroupBundle& b, std::uint64_t size) {
  auto u = unique_normal_of_order(b.group, b.normals, size);
  return u.count == 1 && same_members(*u.unique, b.gp);
}

// Z(G / N) elementary abelian, for N normal in G
bool quotient_center_elem_abelian(const GroupBundle& b, const Subgroup& n,
                                  std::map<std::vector<std::uint32_t>, bool>& memo) {
  auto it = memo.find(n.members);
  if (it != memo.end()) return it->second;
  auto q = quotient_group(b.group, n);
  bool ok = is_elementary_abelian(subgroup_to_group(center(q.group)), b.p);
  memo.emplace(n.members, ok);
  return ok;
}

// ---- claims ----------------------------------------------------------

// every normal subgroup is an intersection of irreducible kernels: the
// kernel-closure lattice must equal the independent class-union enumeration
Outcome claim_L2_2(const GroupBundle& b) {
  if (b.group->n > 256) return na("lattice oracle restricted to |G| <= 256");
  auto oracle = normal_subgroups_oracle(b.group, b.table.classes);
  if (oracle.size() == b.normals.size()) {
    bool equal = true;
    for (std::size_t i = 0; i < oracle.size(); ++i)
      if (!same_members(oracle[i], b.normals[i])) {
        equal = false;
        break;
      }
    if (equal) return pass();
  }
  ordered_json w;
  w["kernel_closure_count"] = b.normals.size();
  w["oracle_count"] = oracle.size();
  std::set<std::vector<std::uint32_t>> a, o;
  for (const auto& s : b.normals) a.insert(s.members);
  for (const auto& s : oracle) o.insert(s.members);
  for (const auto& m : o)
    if (!a.count(m)) {
      w["missing_from_kernel_closure"] = subgroup_brief({b.group, m, true});
      break;
    }
  for (const auto& m : a)
    if (!o.count(m)) {
      w["extra_in_kernel_closure"] = subgroup_brief({b.group, m, true});
      break;
    }
  return fail(std::move(w));
}

// the non-linear kernels intersect trivially
Outcome claim_L2_3(const GroupBundle& b) {
  if (b.abelian) return na("abelian: no non-linear characters");
  Subgroup acc = whole_group(b.group);
  for (const auto& k : b.kprof.kern) acc = intersect(acc, k);
  if (acc.order() == 1) return pass();
  ordered_json w;
  w["intersection"] = subgroup_brief(acc);
  return fail(std::move(w));
}

// [Z(chi), G] <= ker chi for every row
Outcome claim_L2_4(const GroupBundle& b) {
  const auto& g = *b.group;
  for (std::size_t r = 0; r < b.table.num_rows(); ++r) {
    auto ker = kernel_of(b.table, r);
    auto zc = center_of_char(b.table, r);
    auto kmask = member_mask(g.n, ker.members);
    for (auto z : zc.members) {
      for (auto s : g.gens) {
        // commutator [z, s] = z^-1 s^-1 z s; generators suffice since the
        // kernel is normal and [z, xy] factors through [z, x], [z, y]
        std::uint32_t c = g.at(g.at(g.inv[z], g.inv[s]), g.at(z, s));
        if (!((kmask[c >> 6] >> (c & 63)) & 1)) {
          ordered_json w;
          w["row"] = r;
          w["degree"] = b.table.rows[r].degree;
          w["z_element"] = z;
          w["generator"] = s;
          w["commutator"] = c;
          return fail(std::move(w));
        }
      }
    }
  }
  return pass();
}

// skn(G) = {1}  <=>  |G'| = p and Z(G) cyclic
Outcome claim_L2_5(const GroupBundle& b) {
  const bool lhs = b.kprof.skn == std::vector<std::uint64_t>{1};
  const bool z_cyclic = abelian_type_of(b.zg).size() == 1;
  const bool rhs = b.gp.order() == b.p && z_cyclic;
  ordered_json w;
  w["skn"] = b.kprof.skn;
  w["derived_order"] = b.gp.order();
  w["center_type"] = abelian_type_of(b.zg);
  return biconditional(lhs, rhs, std::move(w));
}

// c(G) <= m + 2 for the largest positive m with p^m in skn
Outcome claim_L2_6(const GroupBundle& b) {
  if (b.abelian) return na("abelian: skn is empty");
  auto m = largest_positive_m(b);
  if (!m) return na("skn(G) = {1}: no positive m exists");
  if (b.nclass <= *m + 2) return pass();
  ordered_json w;
  w["m"] = *m;
  w["nilpotency_class"] = b.nclass;
  return fail(std::move(w));
}

// class-2 groups: strong condition forces exp G/Z = exp G' = p; weak allows
// p^2 with pinned types
Outcome claim_T2_8(const GroupBundle& b) {
  if (b.nclass != 2) return na("nilpotency class != 2");
  const bool strong = b.pprof.strong_condition, weak = b.pprof.weak_condition;
  if (!strong && !weak) return na("neither the strong nor the weak condition holds");
  const std::uint64_t eq = exponent_of(*quotient_group(b.group, b.zg).group);
  const std::uint64_t eg = exponent_of_subgroup(b.gp);
  ordered_json w;
  w["exp_G_over_Z"] = eq;
  w["exp_derived"] = eg;
  w["strong"] = strong;
  w["weak"] = weak;
  if (strong) {
    if (eq == b.p && eg == b.p) return pass();
    return fail(std::move(w));
  }
  // weak only
  if (eq != eg || (eq != b.p && eq != b.p * b.p)) return fail(std::move(w));
  if (eq == b.p * b.p) {
    auto qt = abelian_type(quotient_group(b.group, b.zg).group);
    auto gt = abelian_type_of(b.gp);
    const std::vector<std::uint64_t> pp2 = {b.p * b.p, b.p * b.p}, p2 = {b.p * b.p};
    if (qt != pp2 || gt != p2) {
      w["G_over_Z_type"] = qt;
      w["derived_type"] = gt;
      return fail(std::move(w));
    }
  }
  return pass();
}

// |G'| = p forces cd(G) = {1, |G/Z|^(1/2)} and the strong condition
Outcome claim_L2_9(const GroupBundle& b) {
  if (b.gp.order() != b.p) return na("|G'| != p");
  const std::uint64_t quot = b.group->n / b.zg.order();
  const std::uint64_t f = isqrt_u64(quot);
  ordered_json w;
  w["cd"] = b.kprof.cd;
  w["index_of_center"] = quot;
  w["strong"] = b.pprof.strong_condition;
  if (f * f != quot) return fail(std::move(w));
  if (b.kprof.cd != std::vector<std::uint64_t>{1, f}) return fail(std::move(w));
  if (!b.pprof.strong_condition) return fail(std::move(w));
  return pass();
}

// J-group <=> G' central of exponent p
Outcome claim_L2_10(const GroupBundle& b) {
  if (b.abelian) return na("abelian: J-group is defined for non-abelian groups");
  const bool lhs = *b.pprof.j_group;
  const bool rhs = subgroup_le(b.gp, b.zg) && exponent_of_subgroup(b.gp) == b.p;
  ordered_json w;
  w["kernel_orders"] = b.kprof.skn;
  w["derived_central"] = subgroup_le(b.gp, b.zg);
  w["exp_derived"] = exponent_of_subgroup(b.gp);
  return biconditional(lhs, rhs, std::move(w));
}

// skn(G) = {p^m}, m >= 1 forces exp G' = p
Outcome claim_C2_11(const GroupBundle& b) {
  auto m = singleton_m(b);
  if (!m || *m < 1) return na("skn(G) is not a singleton {p^m} with m >= 1");
  const std::uint64_t eg = exponent_of_subgroup(b.gp);
  if (eg == b.p) return pass();
  ordered_json w;
  w["m"] = *m;
  w["exp_derived"] = eg;
  return fail(std::move(w));
}

// abelian sk(G) is the full run p^(n-e), ..., p^n
Outcome claim_L2_12(const GroupBundle& b) {
  if (!b.abelian) return na("non-abelian");
  const int e = ilog_exact(b.p, exponent_of(*b.group));
  std::vector<std::uint64_t> expected;
  for (int i = b.k - e; i <= b.k; ++i) expected.push_back(pow_u64(b.p, i));
  if (b.kprof.sk == expected) return pass();
  ordered_json w;
  w["sk"] = b.kprof.sk;
  w["expected"] = expected;
  return fail(std::move(w));
}

// either G' is the unique normal subgroup of order p^(m+1), or |G'| <= p^m
Outcome claim_L2_13(const GroupBundle& b) {
  if (b.abelian) return na("abelian: skn is empty");
  auto m = largest_positive_m(b);
  if (!m) return na("skn(G) = {1}: no positive m exists");
  const std::uint64_t bound = pow_u64(b.p, *m);
  if (b.gp.order() <= bound) return pass();
  if (unique_normal_is_derived(b, bound * b.p)) return pass();
  ordered_json w;
  w["m"] = *m;
  w["derived_order"] = b.gp.order();
  w["normals_of_order_p_m_plus_1"] = unique_normal_of_order(b.group, b.normals, bound * b.p).count;
  return fail(std::move(w));
}

// rows whose kernel has the largest order p^m satisfy chi(1)^2 = |G : Z(chi)|
Outcome claim_L2_14(const GroupBundle& b) {
  if (b.abelian) return na("abelian: skn is empty");
  auto m = largest_positive_m(b);
  if (!m) return na("skn(G) = {1}: no positive m exists");
  const std::uint64_t target = pow_u64(b.p, *m);
  for (std::size_t r = 0; r < b.table.num_rows(); ++r) {
    if (b.table.rows[r].degree == 1) continue;
    if (kernel_of(b.table, r).order() != target) continue;
    const std::uint64_t zc = center_of_char(b.table, r).order();
    const std::uint64_t d = b.table.rows[r].degree;
    if (d * d * zc != b.group->n) {
      ordered_json w;
      w["row"] = r;
      w["degree"] = d;
      w["char_center_order"] = zc;
      return fail(std::move(w));
    }
  }
  return pass();
}

// ker chi is a proper subgroup of Z(chi) for every non-trivial row
Outcome claim_L2_15(const GroupBundle& b) {
  for (std::size_t r = 0; r < b.table.num_rows(); ++r) {
    auto ker = kernel_of(b.table, r);
    if (ker.order() == b.group->n) continue;  // the trivial character
    auto zc = center_of_char(b.table, r);
    if (!(subgroup_le(ker, zc) && ker.order() < zc.order())) {
      ordered_json w;
      w["row"] = r;
      w["kernel_order"] = ker.order();
      w["char_center_order"] = zc.order();
      return fail(std::move(w));
    }
  }
  return pass();
}

// skn(G) = {1, p} <=> |G| = p^4 of maximal class (empirical: checked directly
// on every group it is run against, no shortcut derivation)
Outcome claim_T2_16(const GroupBundle& b) {
  const bool lhs = b.kprof.skn == std::vector<std::uint64_t>{1, b.p};
  const bool rhs = b.k == 4 && b.nclass == 3;
  ordered_json w;
  w["skn"] = b.kprof.skn;
  w["order_exponent"] = b.k;
  w["nilpotency_class"] = b.nclass;
  return biconditional(lhs, rhs, std::move(w));
}

// value formula and bijection for a center pair: every non-linear chi is
// f * lambda on Z(G) (f = |G:Z|^(1/2)) for a unique lambda with G' not in
// ker lambda, and chi <-> lambda is a bijection
Outcome claim_T2_19(const GroupBundle& b) {
  if (b.abelian) return na("abelian: no non-linear characters");
  if (!*b.pprof.gcp_with_center) return na("(G, Z(G)) is not a vanishing pair");

  const std::uint64_t quot = b.group->n / b.zg.order();
  const std::uint64_t f = isqrt_u64(quot);
  ordered_json w;
  if (f * f != quot) {
    w["index_of_center"] = quot;
    w["reason"] = "center index is not a perfect square";
    return fail(std::move(w));
  }
  if (b.kprof.cd != std::vector<std::uint64_t>{1, f}) {
    w["cd"] = b.kprof.cd;
    w["expected_nonlinear_degree"] = f;
    return fail(std::move(w));
  }

  auto zgroup = subgroup_to_group(b.zg);
  auto tz = dixon_character_table(zgroup);
  if (b.table.e % tz.e != 0) {
    w["reason"] = "center exponent does not divide the group exponent";
    return fail(std::move(w));
  }
  const std::uint64_t stride = b.table.e / tz.e;

  // G' lives inside Z(G) for a vanishing pair; map it to center indices
  std::vector<bool> gp_in_z(b.zg.members.size(), false);
  for (auto x : b.gp.members) {
    auto it = std::lower_bound(b.zg.members.begin(), b.zg.members.end(), x);
    if (it == b.zg.members.end() || *it != x) {
      w["reason"] = "derived subgroup is not inside the center";
      return fail(std::move(w));
    }
    gp_in_z[static_cast<std::size_t>(it - b.zg.members.begin())] = true;
  }

  // rows of the center table whose kernel misses part of G'
  std::set<std::size_t> wanted;
  for (std::size_t lr = 0; lr < tz.num_rows(); ++lr) {
    auto ker = kernel_of(tz, lr);
    std::vector<bool> in_ker(zgroup->n, false);
    for (auto x : ker.members) in_ker[x] = true;
    bool contains_gp = true;
    for (std::uint32_t t = 0; t < zgroup->n; ++t)
      if (gp_in_z[t] && !in_ker[t]) {
        contains_gp = false;
        break;
      }
    if (!contains_gp) wanted.insert(lr);
  }

  // signature of a linear center row: the zeta exponent per center class
  std::map<std::vector<std::uint32_t>, std::size_t> sig_to_row;
  for (std::size_t lr = 0; lr < tz.num_rows(); ++lr) {
    if (tz.rows[lr].degree != 1) {
      w["reason"] = "center table has a non-linear row";
      return fail(std::move(w));
    }
    std::vector<std::uint32_t> sig(tz.num_classes());
    for (std::size_t c = 0; c < tz.num_classes(); ++c) sig[c] = tz.rows[lr].mult[c][0].first;
    sig_to_row[std::move(sig)] = lr;
  }

  std::set<std::size_t> matched;
  std::size_t nonlinear = 0;
  for (std::size_t r = 0; r < b.table.num_rows(); ++r) {
    if (b.table.rows[r].degree == 1) continue;
    ++nonlinear;
    std::vector<std::uint32_t> key(tz.num_classes());
    for (std::uint32_t t = 0; t < zgroup->n; ++t) {
      const std::uint32_t parent = b.zg.members[t];
      const auto& jm = b.table.rows[r].mult[b.table.classes.class_of[parent]];
      if (jm.size() != 1 || jm[0].second != f || jm[0].first % stride != 0) {
        w["row"] = r;
        w["center_element"] = parent;
        w["reason"] = "value on the center is not degree times a root of unity";
        return fail(std::move(w));
      }
      key[tz.classes.class_of[t]] = static_cast<std::uint32_t>(jm[0].first / stride);
    }
    auto it = sig_to_row.find(key);
    if (it == sig_to_row.end()) {
      w["row"] = r;
      w["reason"] = "restriction to the center matches no linear character";
      return fail(std::move(w));
    }
    if (!wanted.count(it->second)) {
      w["row"] = r;
      w["center_row"] = it->second;
      w["reason"] = "matched linear character contains G' in its kernel";
      return fail(std::move(w));
    }
    if (!matched.insert(it->second).second) {
      w["row"] = r;
      w["center_row"] = it->second;
      w["reason"] = "two non-linear rows restrict to the same linear character";
      return fail(std::move(w));
    }
  }
  if (matched.size() != wanted.size() || nonlinear != wanted.size()) {
    w["nonlinear_rows"] = nonlinear;
    w["eligible_linear_characters"] = wanted.size();
    w["reason"] = "correspondence is not a bijection";
    return fail(std::move(w));
  }
  return pass();
}

// |G'| = p makes (G, Z(G)) a vanishing pair
Outcome claim_L2_20(const GroupBundle& b) {
  if (b.gp.order() != b.p) return na("|G'| != p");
  if (*b.pprof.gcp_with_center) return pass();
  ordered_json w;
  w["derived_order"] = b.gp.order();
  w["gcp_with_center"] = false;
  return fail(std::move(w));
}

// skn(G) = {p^m}, m >= 1 forces class 2 and G/Z elementary abelian
Outcome claim_P3_1(const GroupBundle& b) {
  if (b.abelian) return na("abelian: skn is empty");
  auto m = singleton_m(b);
  if (!m || *m < 1) return na("skn(G) is not a singleton {p^m} with m >= 1");
  ordered_json w;
  w["m"] = *m;
  w["nilpotency_class"] = b.nclass;
  if (b.nclass != 2) return fail(std::move(w));
  auto q = quotient_group(b.group, b.zg);
  if (!is_elementary_abelian(q.group, b.p)) {
    w["G_over_Z_type"] = abelian_type(q.group);
    return fail(std::move(w));
  }
  return pass();
}

// under the same hypothesis, a derived subgroup that is the unique normal
// subgroup of order p^(m+1) is elementary abelian
Outcome claim_L3_2(const GroupBundle& b) {
  if (b.abelian) return na("abelian: skn is empty");
  auto m = singleton_m(b);
  if (!m || *m < 1) return na("skn(G) is not a singleton {p^m} with m >= 1");
  if (!unique_normal_is_derived(b, pow_u64(b.p, *m + 1)))
    return na("G' is not the unique normal subgroup of order p^(m+1)");
  if (is_elementary_abelian(subgroup_to_group(b.gp), b.p)) return pass();
  ordered_json w;
  w["derived_type"] = abelian_type_of(b.gp);
  return fail(std::move(w));
}

// |G'| = p and skn(G) = {p^m} (m >= 0) force |Z| / exp Z = p^m
Outcome claim_L3_3(const GroupBundle& b) {
  if (b.gp.order() != b.p) return na("|G'| != p");
  auto m = singleton_m(b);
  if (!m) return na("skn(G) is not a singleton {p^m}");
  const std::uint64_t ez = exponent_of_subgroup(b.zg);
  if (b.zg.order() == ez * pow_u64(b.p, *m)) return pass();
  ordered_json w;
  w["m"] = *m;
  w["center_order"] = b.zg.order();
  w["center_exponent"] = ez;
  return fail(std::move(w));
}

// |G'| = p: skn(G) = {p} <=> Z(G) is C_p x C_p
Outcome claim_L3_4(const GroupBundle& b) {
  if (b.gp.order() != b.p) return na("|G'| != p");
  const bool lhs = b.kprof.skn == std::vector<std::uint64_t>{b.p};
  const bool rhs = abelian_type_of(b.zg) == std::vector<std::uint64_t>{b.p, b.p};
  ordered_json w;
  w["skn"] = b.kprof.skn;
  w["center_type"] = abelian_type_of(b.zg);
  return biconditional(lhs, rhs, std::move(w));
}

// skn(G) = {p} <=> class 2 and (|G'| = p with Z = C_p x C_p, or G' = C_p x C_p
// the unique normal subgroup of order p^2)
Outcome claim_P3_5(const GroupBundle& b) {
  const bool lhs = !b.abelian && b.kprof.skn == std::vector<std::uint64_t>{b.p};
  const std::vector<std::uint64_t> pxp = {b.p, b.p};
  const bool cond_a = b.gp.order() == b.p && abelian_type_of(b.zg) == pxp;
  const bool cond_b =
      b.gp.order() == b.p * b.p && abelian_type_of(b.gp) == pxp && unique_normal_is_derived(b, b.p * b.p);
  const bool rhs = b.nclass == 2 && (cond_a || cond_b);
  ordered_json w;
  w["skn"] = b.kprof.skn;
  w["nilpotency_class"] = b.nclass;
  w["cond_small_derived"] = cond_a;
  w["cond_unique_p2"] = cond_b;
  return biconditional(lhs, rhs, std::move(w));
}

// |G'| = p: skn(G) = {p^m}, m >= 1 <=> Z(G) elementary abelian of rank m+1
Outcome claim_P3_6(const GroupBundle& b) {
  if (b.gp.order() != b.p) return na("|G'| != p");
  auto m = singleton_m(b);
  const bool lhs = m && *m >= 1;
  const auto ztype = abelian_type_of(b.zg);
  const bool z_elem = is_elementary_abelian(subgroup_to_group(b.zg), b.p);
  const bool rhs = z_elem && ztype.size() >= 2;
  ordered_json w;
  w["skn"] = b.kprof.skn;
  w["center_type"] = ztype;
  if (!lhs && !rhs) return na("both-false");
  if (lhs && (!rhs || ztype.size() != static_cast<std::size_t>(*m) + 1)) {
    w["lhs_holds"] = lhs;
    w["rhs_holds"] = rhs;
    return fail(std::move(w));
  }
  if (rhs && (!lhs || static_cast<std::size_t>(*m) + 1 != ztype.size())) {
    w["lhs_holds"] = lhs;
    w["rhs_holds"] = rhs;
    return fail(std::move(w));
  }
  return pass();
}

// the main characterization, both directions, with the m pinned by each side
Outcome claim_T_MAIN(const GroupBundle& b) {
  if (b.abelian) return na("abelian: no non-linear characters");
  if (b.p == 2) return na("stated for odd primes");

  auto msing = singleton_m(b);
  const bool lhs = msing && *msing >= 1;

  std::map<std::vector<std::uint32_t>, bool> memo;
  auto cond1 = [&](int m) {
    return b.gp.order() == pow_u64(b.p, m + 1) &&
           is_elementary_abelian(subgroup_to_group(b.gp), b.p) &&
           unique_normal_is_derived(b, pow_u64(b.p, m + 1));
  };
  auto quotient_centers_ok = [&]() {
    for (std::size_t r = 0; r < b.table.num_rows(); ++r) {
      if (b.table.rows[r].degree == 1) continue;
      auto n = intersect(b.gp, kernel_of(b.table, r));
      n.normal = true;
      if (!quotient_center_elem_abelian(b, n, memo)) return false;
    }
    return true;
  };
  auto cond2 = [&](int m) {
    const std::uint64_t denom = pow_u64(b.p, m + 1);
    if (b.group->n % denom != 0) return false;
    const std::uint64_t f2 = b.group->n / denom;
    const std::uint64_t f = isqrt_u64(f2);
    if (f * f != f2) return false;
    if (b.kprof.cd != std::vector<std::uint64_t>{1, f}) return false;
    return quotient_centers_ok();
  };

  ordered_json info;
  info["skn"] = b.kprof.skn;
  info["nilpotency_class"] = b.nclass;

  bool c1 = false, c2 = false;
  if (lhs) {
    c1 = cond1(*msing);
    c2 = cond2(*msing);
    info["cond1"] = c1;
    info["cond2"] = c2;
    if (b.nclass != 2 || (!c1 && !c2)) {
      info["reason"] = "uniform kernel order without the claimed structure";
      return fail(std::move(info));
    }
    // parenthetical consequence of the second branch
    if (c2 && !c1 && b.gp.order() > pow_u64(b.p, *msing)) {
      info["derived_order"] = b.gp.order();
      info["reason"] = "second branch holds but |G'| exceeds p^m";
      return fail(std::move(info));
    }
  }

  // reverse direction: each branch pins its own m
  bool reverse_triggered = false;
  if (b.nclass == 2) {
    // branch 1: |G'| = p^(m'+1), m' >= 1
    const int lg = ilog_exact(b.p, b.gp.order());
    if (lg >= 2 && cond1(lg - 1)) {
      reverse_triggered = true;
      if (!lhs || *msing != lg - 1) {
        info["implied_m"] = lg - 1;
        info["reason"] = "first branch holds but skn is not the matching singleton";
        return fail(std::move(info));
      }
    }
    // branch 2: cd = {1, f} pins p^(m'+1) = |G| / f^2
    if (b.kprof.cd.size() == 2) {
      const std::uint64_t f = b.kprof.cd[1];
      if (b.group->n % (f * f) == 0) {
        const int mp1 = ilog_exact(b.p, b.group->n / (f * f));
        if (mp1 >= 2 && cond2(mp1 - 1)) {
          reverse_triggered = true;
          if (!lhs || *msing != mp1 - 1) {
            info["implied_m"] = mp1 - 1;
            info["reason"] = "second branch holds but skn is not the matching singleton";
            return fail(std::move(info));
          }
        }
      }
    }
  }

  if (!lhs && !reverse_triggered) return na("both-false");
  return pass_with(std::move(info));
}

Outcome run_claim(const std::string& id, const GroupBundle& b) {
  if (b.p == 0) return na("|G| is not a prime power");
  if (id == "L2.2") return claim_L2_2(b);
  if (id == "L2.3") return claim_L2_3(b);
  if (id == "L2.4") return claim_L2_4(b);
  if (id == "L2.5") return claim_L2_5(b);
  if (id == "L2.6") return claim_L2_6(b);
  if (id == "T2.8") return claim_T2_8(b);
  if (id == "L2.9") return claim_L2_9(b);
  if (id == "L2.10") return claim_L2_10(b);
  if (id == "C2.11") return claim_C2_11(b);
  if (id == "L2.12") return claim_L2_12(b);
  if (id == "L2.13") return claim_L2_13(b);
  if (id == "L2.14") return claim_L2_14(b);
  if (id == "L2.15") return claim_L2_15(b);
  if (id == "T2.16") return claim_T2_16(b);
  if (id == "T2.19") return claim_T2_19(b);
  if (id == "L2.20") return claim_L2_20(b);
  if (id == "P3.1") return claim_P3_1(b);
  if (id == "L3.2") return claim_L3_2(b);
  if (id == "L3.3") return claim_L3_3(b);
  if (id == "L3.4") return claim_L3_4(b);
  if (id == "P3.5") return claim_P3_5(b);
  if (id == "P3.6") return claim_P3_6(b);
  if (id == "T-MAIN") return claim_T_MAIN(b);
  std::string msg = "unknown claim '" + id + "'; valid ids:";
  for (const auto& known : claim_registry()) msg += " " + known;
  throw UnknownClaim(msg);
}

// claims with no parity hypothesis stay binding at p = 2
bool enforced_at_p2(const std::string& id) {
  return id == "L2.2" || id == "L2.3" || id == "L2.4" || id == "L2.15" || id == "L2.12";
}

}  // namespace

VerdictReport verify_claim(const std::string& claim_id, const GroupBundle& b) {
  if (!is_known_claim(claim_id)) {
    std::string msg = "unknown claim '" + claim_id + "'; valid ids:";
    for (const auto& known : claim_registry()) msg += " " + known;
    throw UnknownClaim(msg);
  }
  VerdictReport rep;
  rep.claim_id = claim_id;
  rep.group_name = b.name;
  Outcome out;
  try {
    out = run_claim(claim_id, b);
  } catch (const UnknownClaim&) {
    throw;
  } catch (const NotApplicable& e) {
    out = na(e.what());
  } catch (const std::exception& e) {
    ordered_json w;
    w["exception"] = e.what();
    out = fail(std::move(w));
  }
  rep.verdict = out.verdict;
  rep.witness = std::move(out.witness);
  rep.scope_note = std::move(out.scope_note);
  if (b.p == 2 && !enforced_at_p2(claim_id)) {
    if (!rep.scope_note.empty()) rep.scope_note += "; ";
    rep.scope_note += "p=2: outside the claim's stated odd-p scope, exploratory";
  }
  return rep;
}

CorpusResult verify_corpus(const std::vector<CorpusEntry>& entries,
                           const std::vector<std::string>& claims, const BuildOptions& build,
                           int jobs) {
  for (const auto& id : claims) {
    if (!is_known_claim(id)) {
      std::string msg = "unknown claim '" + id + "'; valid ids:";
      for (const auto& known : claim_registry()) msg += " " + known;
      throw UnknownClaim(msg);
    }
  }
  struct Slot {
    std::vector<VerdictReport> reports;
    std::string error;
    bool errored = false;
  };
  std::vector<Slot> slots(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      Slot& slot = slots[i];
      try {
        auto bundle = make_bundle(entries[i].name, build_group(resolve_spec(entries[i].spec), build));
        for (const auto& id : claims) slot.reports.push_back(verify_claim(id, bundle));
      } catch (const std::exception& e) {
        slot.reports.clear();
        slot.error = e.what();
        slot.errored = true;
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  CorpusResult res;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (slots[i].errored) {
      res.errors.emplace_back(entries[i].name, slots[i].error);
    } else {
      for (auto& r : slots[i].reports) res.reports.push_back(std::move(r));
    }
  }
  return res;
}

bool has_in_scope_fail(const CorpusResult& res) {
  for (const auto& r : res.reports)
    if (r.verdict == Verdict::fail && r.scope_note.find("exploratory") == std::string::npos)
      return true;
  return false;
}

ordered_json corpus_result_to_json(const CorpusResult& res,
                                   const std::vector<std::string>& claims) {
  ordered_json j;
  auto& reports = j["reports"] = ordered_json::array();
  for (const auto& r : res.reports) {
    ordered_json rj;
    rj["claim"] = r.claim_id;
    rj["group"] = r.group_name;
    rj["verdict"] = verdict_name(r.verdict);
    if (!r.witness.is_null()) rj["witness"] = r.witness;
    if (!r.scope_note.empty()) rj["scope_note"] = r.scope_note;
    reports.push_back(std::move(rj));
  }
  auto& summary = j["summary"];
  for (const auto& id : claims) {
    std::size_t np = 0, nf = 0, nn = 0;
    for (const auto& r : res.reports) {
      if (r.claim_id != id) continue;
      if (r.verdict == Verdict::pass) ++np;
      else if (r.verdict == Verdict::fail) ++nf;
      else ++nn;
    }
    ordered_json row;
    row["pass"] = np;
    row["fail"] = nf;
    row["not_applicable"] = nn;
    summary[id] = std::move(row);
  }
  auto& errors = j["errors"] = ordered_json::array();
  for (const auto& [group, message] : res.errors) {
    ordered_json ej;
    ej["group"] = group;
    ej["error"] = message;
    errors.push_back(std::move(ej));
  }
  j["in_scope_fail"] = has_in_scope_fail(res);
  return j;
}

}  // namespace charkern
