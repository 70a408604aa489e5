#include "charkern/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>

#include "charkern/numeric.hpp"

namespace charkern {

namespace {

GroupSpec cyclic_spec(std::uint64_t n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::cyclic;
  s.n = n;
  return s;
}

GroupSpec abelian_spec(const std::vector<std::uint64_t>& orders) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::direct_product;
  for (auto n : orders) s.factors.push_back(cyclic_spec(n));
  return s;
}

GroupSpec elem_spec(std::uint64_t p, int k) {
  return abelian_spec(std::vector<std::uint64_t>(static_cast<std::size_t>(k), p));
}

GroupSpec ut_spec(int dim, std::uint64_t p) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::unitriangular;
  s.dim = dim;
  s.p = p;
  return s;
}

GroupSpec semidirect_spec(std::uint64_t pa, std::uint64_t pb, std::uint64_t r) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::semidirect_cyclic;
  s.pa = pa;
  s.pb = pb;
  s.r = r;
  return s;
}

GroupSpec product_spec(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::direct_product;
  s.factors.push_back(std::move(a));
  s.factors.push_back(std::move(b));
  return s;
}

GroupSpec matrix_spec(int dim, std::uint64_t modulus,
                      std::vector<std::vector<std::int64_t>> gens) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::matrix_group;
  s.dim = dim;
  s.modulus = modulus;
  s.generators = std::move(gens);
  return s;
}

// the full upper unitriangular group over Z/9 (order 729, class 2, exponent 9)
GroupSpec ut3_z9_spec() {
  return matrix_spec(3, 9,
                     {{1, 1, 0, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 1, 0, 0, 1}});
}

// quaternion group as a matrix group mod 3: i and j inside SL(2,3)
GroupSpec q8_spec() {
  return matrix_spec(2, 3, {{0, 2, 1, 0}, {1, 1, 1, 2}});
}

// UT(3,F9) written over Z/3: each F9 = F3[t]/(t^2+1) entry becomes the 2x2
// block [[a,-b],[b,a]], so the root generators X12(1), X12(t), X23(1), X23(t)
// turn into 6x6 block-unitriangular matrices (order 729, class 2, exponent 3,
// center = derived = C3 x C3)
GroupSpec ut3_f9_spec() {
  return matrix_spec(6, 3, {{1, 0, 1, 0, 0, 0,  //
                             0, 1, 0, 1, 0, 0,  //
                             0, 0, 1, 0, 0, 0,  //
                             0, 0, 0, 1, 0, 0,  //
                             0, 0, 0, 0, 1, 0,  //
                             0, 0, 0, 0, 0, 1},
                            {1, 0, 0, 2, 0, 0,  //
                             0, 1, 1, 0, 0, 0,  //
                             0, 0, 1, 0, 0, 0,  //
                             0, 0, 0, 1, 0, 0,  //
                             0, 0, 0, 0, 1, 0,  //
                             0, 0, 0, 0, 0, 1},
                            {1, 0, 0, 0, 0, 0,  //
                             0, 1, 0, 0, 0, 0,  //
                             0, 0, 1, 0, 1, 0,  //
                             0, 0, 0, 1, 0, 1,  //
                             0, 0, 0, 0, 1, 0,  //
                             0, 0, 0, 0, 0, 1},
                            {1, 0, 0, 0, 0, 0,  //
                             0, 1, 0, 0, 0, 0,  //
                             0, 0, 1, 0, 0, 2,  //
                             0, 0, 0, 1, 1, 0,  //
                             0, 0, 0, 0, 1, 0,  //
                             0, 0, 0, 0, 0, 1}});
}

struct RegistryRow {
  std::string name;
  GroupSpec spec;
  std::uint64_t order;
  std::vector<std::string> tags;
};

const std::vector<RegistryRow>& registry() {
  static const std::vector<RegistryRow> rows = [] {
    std::vector<RegistryRow> v;
    auto add = [&](std::string name, GroupSpec spec, std::uint64_t order,
                   std::vector<std::string> tags) {
      v.push_back({std::move(name), std::move(spec), order, std::move(tags)});
    };
    for (std::uint64_t p : {std::uint64_t(3), std::uint64_t(5)}) {
      const std::string ps = std::to_string(p);
      std::uint64_t pk = p;
      for (int k = 1; k <= 4; ++k) {
        add("cyclic-" + std::to_string(pk), cyclic_spec(pk), pk, {"abelian", "cyclic"});
        pk *= p;
      }
      pk = p * p;
      for (int k = 2; k <= 4; ++k) {
        add("elem-" + std::to_string(pk), elem_spec(p, k), pk,
            {"abelian", "elementary-abelian"});
        pk *= p;
      }
    }
    add("abelian-9x3", abelian_spec({9, 3}), 27, {"abelian"});
    add("abelian-27x3", abelian_spec({27, 3}), 81, {"abelian"});
    add("abelian-27x9", abelian_spec({27, 9}), 243, {"abelian"});
    add("abelian-9x9", abelian_spec({9, 9}), 81, {"abelian"});
    add("abelian-9x3x3", abelian_spec({9, 3, 3}), 81, {"abelian"});
    add("abelian-25x5", abelian_spec({25, 5}), 125, {"abelian"});
    add("abelian-125x5", abelian_spec({125, 5}), 625, {"abelian"});
    add("abelian-25x25", abelian_spec({25, 25}), 625, {"abelian"});
    add("abelian-25x5x5", abelian_spec({25, 5, 5}), 625, {"abelian"});

    add("heisenberg-3", ut_spec(3, 3), 27, {"extraspecial", "class-2"});
    add("heisenberg-5", ut_spec(3, 5), 125, {"extraspecial", "class-2"});
    add("extraspecial-27-exp9", semidirect_spec(9, 3, 4), 27, {"extraspecial", "class-2"});
    add("extraspecial-125-exp25", semidirect_spec(25, 5, 6), 125, {"extraspecial", "class-2"});
    add("ut3-z9", ut3_z9_spec(), 729, {"class-2"});
    add("ut3-f9", ut3_f9_spec(), 729, {"class-2", "semi-extraspecial"});
    add("ut4-3", ut_spec(4, 3), 729, {"class-3"});

    struct NonAb {
      const char* name;
      GroupSpec spec;
      std::uint64_t order, p;
    };
    const NonAb non_abelian[] = {
        {"heisenberg-3", ut_spec(3, 3), 27, 3},
        {"heisenberg-5", ut_spec(3, 5), 125, 5},
        {"extraspecial-27-exp9", semidirect_spec(9, 3, 4), 27, 3},
        {"extraspecial-125-exp25", semidirect_spec(25, 5, 6), 125, 5},
        {"ut3-z9", ut3_z9_spec(), 729, 3},
        {"ut3-f9", ut3_f9_spec(), 729, 3},
        {"ut4-3", ut_spec(4, 3), 729, 3},
    };
    for (const auto& na : non_abelian) {
      add(std::string(na.name) + "-x-c" + std::to_string(na.p),
          product_spec(na.spec, cyclic_spec(na.p)), na.order * na.p, {"product"});
      add(std::string(na.name) + "-x-elem" + std::to_string(na.p * na.p),
          product_spec(na.spec, elem_spec(na.p, 2)), na.order * na.p * na.p, {"product"});
    }

    add("d8", ut_spec(3, 2), 8, {"p2", "dihedral"});
    add("q8", q8_spec(), 8, {"p2", "quaternion"});
    return v;
  }();
  return rows;
}

}  // namespace

GroupSpec preset(const std::string& name) {
  for (const auto& row : registry())
    if (row.name == name) return row.spec;
  throw UnknownPreset("unknown preset '" + name + "'");
}

std::vector<PresetInfo> preset_registry() {
  std::vector<PresetInfo> out;
  for (const auto& row : registry()) out.push_back({row.name, row.order, row.tags});
  return out;
}

GroupSpec resolve_spec(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::preset) return resolve_spec(preset(spec.name));
  if (spec.kind == GroupSpec::Kind::direct_product) {
    GroupSpec out = spec;
    for (auto& f : out.factors) f = resolve_spec(f);
    return out;
  }
  return spec;
}

std::vector<CorpusEntry> default_corpus(bool include_p2) {
  std::vector<CorpusEntry> out;
  for (const auto& row : registry()) {
    auto pp = prime_power(row.order);
    if (!pp) continue;
    bool in_range = false;
    if (pp->p == 3) in_range = row.order >= 9 && row.order <= 729;
    if (pp->p == 5) in_range = row.order >= 25 && row.order <= 625;
    if (pp->p == 2) in_range = include_p2;
    if (!in_range) continue;
    CorpusEntry e;
    e.name = row.name;
    e.spec.kind = GroupSpec::Kind::preset;
    e.spec.name = row.name;
    e.tags = row.tags;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// closure of `seed` under multiplication, abandoned once it exceeds `bound`
std::vector<std::uint32_t> bounded_closure(const Group& g, std::vector<std::uint32_t> seed,
                                           std::uint64_t bound) {
  std::vector<std::uint32_t> members{0};
  std::vector<bool> in(g.n, false);
  in[0] = true;
  std::vector<std::uint32_t> queue;
  auto push = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  for (auto s : seed) push(s);
  std::vector<std::uint32_t> gens = seed;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (members.size() > bound) return {};
    const std::uint32_t x = queue[head];
    for (auto s : gens) {
      push(g.at(x, s));
      push(g.at(s, x));
    }
  }
  if (members.size() > bound) return {};
  std::sort(members.begin(), members.end());
  return members;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    else if (!out.empty() && out.back() != '-')
      out.push_back('-');
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

GroupSpec concrete_spec_of(const GroupPtr& h) {
  GroupSpec s;
  if (h->realization == Group::Realization::matrices) {
    s.kind = GroupSpec::Kind::matrix_group;
    s.dim = h->real_dim;
    s.modulus = h->real_modulus;
    for (auto gi : h->gens)
      s.generators.emplace_back(h->elems[gi].begin(), h->elems[gi].end());
  } else if (h->realization == Group::Realization::permutations) {
    s.kind = GroupSpec::Kind::permutation_group;
    s.degree = h->real_dim;
    for (auto gi : h->gens)
      s.generators.emplace_back(h->elems[gi].begin(), h->elems[gi].end());
  } else {
    // left regular representation: generator g acts by x -> g*x
    s.kind = GroupSpec::Kind::permutation_group;
    s.degree = static_cast<int>(h->n);
    for (auto gi : h->gens) {
      std::vector<std::int64_t> images(h->n);
      for (std::uint32_t x = 0; x < h->n; ++x) images[x] = h->at(gi, x);
      s.generators.push_back(std::move(images));
    }
  }
  if (s.generators.empty()) {
    // trivial subgroup: identity generator keeps the spec well-formed
    if (s.kind == GroupSpec::Kind::matrix_group) {
      std::vector<std::int64_t> id(static_cast<std::size_t>(s.dim) * s.dim, 0);
      for (int i = 0; i < s.dim; ++i) id[static_cast<std::size_t>(i) * s.dim + i] = 1;
      s.generators.push_back(std::move(id));
    } else {
      std::vector<std::int64_t> id(static_cast<std::size_t>(s.degree));
      for (int i = 0; i < s.degree; ++i) id[static_cast<std::size_t>(i)] = i;
      s.generators.push_back(std::move(id));
    }
  }
  return s;
}

}  // namespace

std::vector<CorpusEntry> search_subgroups(const GroupSpec& ambient, const SearchOptions& opt) {
  GroupPtr g;
  try {
    g = build_group(resolve_spec(ambient), opt.build);
  } catch (const GroupTooLarge& e) {
    throw AmbientTooLarge(e.what());
  }
  std::vector<CorpusEntry> results;
  if (opt.limit == 0 || opt.order == 0 || g->n % opt.order != 0) return results;

  const std::string base = sanitize(g->name) + "-o" + std::to_string(opt.order);
  auto pp = prime_power(g->n);

  std::set<std::vector<std::uint32_t>> seen_hits, seen_small;
  std::vector<std::vector<std::uint32_t>> smalls;  // proper-order results, pair phase

  auto accept = [&](const std::vector<std::uint32_t>& members) {
    if (!seen_hits.insert(members).second) return;
    Subgroup sub;
    sub.parent = g;
    sub.members = members;
    auto h = subgroup_to_group(sub);
    const int cls = nilpotency_class(h);
    if (opt.nilpotency && cls != *opt.nilpotency) return;
    CorpusEntry e;
    char idx[8];
    std::snprintf(idx, sizeof idx, "%03zu", results.size() + 1);
    e.name = base + "-" + idx;
    e.spec = concrete_spec_of(h);
    e.tags = {"search-result", "class-" + std::to_string(cls)};
    if (pp && members.size() == pow_u64(pp->p, cls + 1) && cls >= 2)
      e.tags.push_back("maximal-class");
    results.push_back(std::move(e));
  };

  for (std::uint32_t i = 1; i < g->n && results.size() < opt.limit; ++i) {
    for (std::uint32_t j = i; j < g->n && results.size() < opt.limit; ++j) {
      auto members = bounded_closure(*g, {i, j}, opt.order);
      if (members.empty()) continue;
      if (members.size() == opt.order) {
        accept(members);
      } else if (seen_small.insert(members).second) {
        smalls.push_back(std::move(members));
      }
    }
  }
  // pairs exhausted below the limit: extend the proper subgroups by one more
  // generator (covers every 3-generated subgroup without iterating n^3 triples)
  if (results.size() < opt.limit) {
    for (const auto& small : smalls) {
      if (results.size() >= opt.limit) break;
      std::vector<bool> in(g->n, false);
      for (auto m : small) in[m] = true;
      for (std::uint32_t t = 1; t < g->n && results.size() < opt.limit; ++t) {
        if (in[t]) continue;
        auto seed = small;
        seed.push_back(t);
        auto members = bounded_closure(*g, seed, opt.order);
        if (members.size() == opt.order) accept(members);
      }
    }
  }
  return results;
}

}  // namespace charkern
