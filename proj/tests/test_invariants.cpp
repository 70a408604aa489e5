#include <doctest.h>

#include <algorithm>

#include "charkern/catalog.hpp"
#include "charkern/chartab.hpp"
#include "charkern/invariants.hpp"

using namespace charkern;

namespace {

struct Ctx {
  GroupPtr g;
  CharacterTable t;
  std::vector<Subgroup> normals;
  KernelProfile kp;
};

Ctx make(const std::string& name) {
  Ctx c;
  c.g = build_group(resolve_spec(preset(name)));
  c.t = dixon_character_table(c.g);
  c.normals = normal_subgroups(c.g, c.t);
  c.kp = kernel_profile(c.g, c.t);
  return c;
}

using v64 = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("kernel profile of the heisenberg group") {
  auto c = make("heisenberg-3");
  CHECK(c.kp.sk == v64{1, 9, 27});
  CHECK(c.kp.skn == v64{1});
  CHECK(c.kp.cd == v64{1, 3});
  REQUIRE(c.kp.m_max.has_value());
  CHECK(*c.kp.m_max == 0);
  // both non-linear characters are faithful, sharing the trivial kernel
  REQUIRE(c.kp.kern.size() == 1);
  CHECK(c.kp.kern[0].order() == 1);
  CHECK(c.kp.kern_char_count[0] == 2);
}

TEST_CASE("kernel profile of the condition-2 witness") {
  auto c = make("heisenberg-3-x-c3");
  CHECK(c.kp.sk == v64{3, 27, 81});
  CHECK(c.kp.skn == v64{3});
  CHECK(c.kp.cd == v64{1, 3});
  REQUIRE(c.kp.m_max.has_value());
  CHECK(*c.kp.m_max == 1);
  // six non-linear rows land on three distinct order-3 kernels, two each
  REQUIRE(c.kp.kern.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(c.kp.kern[i].order() == 3);
    CHECK(c.kp.kern_char_count[i] == 2);
  }
  // no non-linear kernel contains the derived subgroup
  auto gp = derived_subgroup(c.g);
  for (const auto& k : c.kp.kern) CHECK(!subgroup_le(gp, k));
}

TEST_CASE("kernel profile of UT(3, Z/9): mixed kernel orders") {
  auto c = make("ut3-z9");
  CHECK(c.kp.sk == v64{1, 27, 81, 243, 729});
  CHECK(c.kp.skn == v64{1, 27});
  CHECK(c.kp.cd == v64{1, 3, 9});
  // six faithful degree-9 rows; eighteen degree-3 rows on nine order-27 kernels
  REQUIRE(c.kp.kern.size() == 10);
  CHECK(c.kp.kern[0].order() == 1);
  CHECK(c.kp.kern_char_count[0] == 6);
  for (std::size_t i = 1; i < 10; ++i) {
    CHECK(c.kp.kern[i].order() == 27);
    CHECK(c.kp.kern_char_count[i] == 2);
  }
}

TEST_CASE("abelian groups have empty skn and full sk ladder") {
  auto c = make("cyclic-9");
  CHECK(c.kp.sk == v64{1, 3, 9});
  CHECK(c.kp.skn.empty());
  CHECK(c.kp.kern.empty());
  CHECK(c.kp.cd == v64{1});
  CHECK(!c.kp.m_max.has_value());
  auto e = make("elem-9");
  CHECK(e.kp.sk == v64{3, 9});  // no faithful linear character on C3 x C3
}

TEST_CASE("vanishing predicates: positive and negative instances") {
  auto h = make("heisenberg-3");
  CHECK(is_gvz(h.g, h.t));
  CHECK(is_gcp(h.g, center(h.g), h.t));

  // UT(3, Z/9) is GVZ but (G, Z(G)) is not a vanishing pair
  auto u = make("ut3-z9");
  CHECK(is_gvz(u.g, u.t));
  CHECK(!is_gcp(u.g, center(u.g), u.t));

  // UT(4,3) fails GVZ
  auto w = make("ut4-3");
  CHECK(!is_gvz(w.g, w.t));

  // abelian groups have no non-linear characters to quantify over
  auto a = make("cyclic-9");
  CHECK_THROWS_AS(is_gvz(a.g, a.t), NotApplicable);
}

TEST_CASE("gcp accepts any normal subgroup, not only the center") {
  auto c = make("heisenberg-3");
  // (G, G) is trivially a vanishing pair; (G, 1) is not for non-abelian G
  CHECK(is_gcp(c.g, whole_group(c.g), c.t));
  CHECK(!is_gcp(c.g, trivial_subgroup(c.g), c.t));
  // non-normal input is rejected: order-3 subgroup outside the center
  auto zg = center(c.g);
  for (std::uint32_t x = 1; x < c.g->n; ++x) {
    if (zg.contains(x)) continue;
    auto s = cyclic_subgroup(c.g, x);
    if (!is_normal_set(*c.g, s.members)) {
      CHECK_THROWS_AS(is_gcp(c.g, s, c.t), NotNormalError);
      break;
    }
  }
}

TEST_CASE("strong and weak conditions") {
  auto h = make("heisenberg-3");
  auto [sh, wh] = check_strong_weak(h.g, h.normals);
  CHECK(sh);
  CHECK(wh);
  // ut3-z9 has a normal subgroup violating both (order-81 N with G' not
  // inside, N not central, |NZ/Z| > 3)
  auto u = make("ut3-z9");
  auto [su, wu] = check_strong_weak(u.g, u.normals);
  CHECK(!su);
  CHECK(!wu);
  // strong implies weak on every corpus group
  for (const auto& entry : default_corpus(true)) {
    auto g = build_group(resolve_spec(entry.spec));
    auto t = dixon_character_table(g);
    auto ns = normal_subgroups(g, t);
    auto [s, w] = check_strong_weak(g, ns);
    CAPTURE(entry.name);
    if (s) CHECK(w);
  }
}

TEST_CASE("J-group predicate compares distinct kernels only") {
  auto h = make("heisenberg-3");
  CHECK(is_j_group(h.g, h.kp));  // single kernel: vacuously nonincident
  auto p = make("heisenberg-3-x-c3");
  CHECK(is_j_group(p.g, p.kp));  // three order-3 kernels, pairwise incomparable
  auto u = make("ut3-z9");
  CHECK(!is_j_group(u.g, u.kp));  // trivial kernel sits inside the order-27 ones
  auto a = make("elem-9");
  CHECK_THROWS_AS(is_j_group(a.g, a.kp), NotApplicable);
}

TEST_CASE("K(m, n) bookkeeping") {
  auto h = make("heisenberg-3");
  auto [m1, n1] = k_mn(h.g, h.kp, h.normals);
  CHECK(m1 == 1);
  CHECK(n1 == 1);  // only the trivial subgroup misses G'
  auto p = make("heisenberg-3-x-c3");
  auto [m2, n2] = k_mn(p.g, p.kp, p.normals);
  CHECK(m2 == 3);
  CHECK(n2 == 4);  // trivial + the three kernels
  auto u = make("ut3-z9");
  auto [m3, n3] = k_mn(u.g, u.kp, u.normals);
  CHECK(m3 == 10);
  CHECK(n3 == 23);
  auto a = make("cyclic-27");
  CHECK_THROWS_AS(k_mn(a.g, a.kp, a.normals), NotApplicable);
}

TEST_CASE("unique normal subgroup of a given order") {
  auto h = make("heisenberg-3");
  auto r = unique_normal_of_order(h.g, h.normals, 3);
  CHECK(r.count == 1);  // the center is the only normal order-3 subgroup
  REQUIRE(r.unique.has_value());
  CHECK(same_members(*r.unique, center(h.g)));
  r = unique_normal_of_order(h.g, h.normals, 9);
  CHECK(r.count == 4);
  CHECK(!r.unique.has_value());
  r = unique_normal_of_order(h.g, h.normals, 81);
  CHECK(r.count == 0);
}

TEST_CASE("predicate profile fills the abelian-dependent optionals") {
  auto h = make("heisenberg-3");
  auto pp = predicate_profile(h.g, h.t, h.kp, h.normals);
  REQUIRE(pp.gvz.has_value());
  CHECK(*pp.gvz);
  REQUIRE(pp.gcp_with_center.has_value());
  CHECK(*pp.gcp_with_center);
  REQUIRE(pp.j_group.has_value());
  CHECK(*pp.j_group);
  CHECK(pp.strong_condition);
  CHECK(pp.weak_condition);
  REQUIRE(pp.k_m.has_value());
  CHECK(*pp.k_m == 1);
  CHECK(*pp.k_n == 1);
  CHECK(pp.elementary_abelian_center);
  CHECK(pp.normal_order_counts.at(9) == 4);

  auto a = make("cyclic-9");
  auto ap = predicate_profile(a.g, a.t, a.kp, a.normals);
  CHECK(!ap.gvz.has_value());
  CHECK(!ap.gcp_with_center.has_value());
  CHECK(!ap.j_group.has_value());
  CHECK(!ap.k_m.has_value());
  CHECK(!ap.elementary_abelian_center);  // C9 is not elementary
}

TEST_CASE("profile of the semi-extraspecial group over F9") {
  auto c = make("ut3-f9");
  CHECK(c.kp.skn == v64{3});
  CHECK(c.kp.cd == v64{1, 9});
  auto gp = derived_subgroup(c.g);
  auto zg = center(c.g);
  CHECK(same_members(gp, zg));
  CHECK(gp.order() == 9);
  CHECK(is_elementary_abelian(subgroup_to_group(gp), 3));
  // the derived subgroup is the unique normal subgroup of order 9
  auto r = unique_normal_of_order(c.g, c.normals, 9);
  CHECK(r.count == 1);
  REQUIRE(r.unique.has_value());
  CHECK(same_members(*r.unique, gp));
  // eight degree-9 rows, kernels of order 3 inside the center
  REQUIRE(c.kp.kern.size() == 4);
  for (const auto& k : c.kp.kern) {
    CHECK(k.order() == 3);
    CHECK(subgroup_le(k, zg));
  }
}
