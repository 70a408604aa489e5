#include "charkern/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_map>

#include "charkern/numeric.hpp"

namespace charkern {

namespace {

// BFS closure from the identity, right-multiplying by generators in spec
// order. Returns the element list in discovery order; index 0 is the
// identity. Dom needs: Elem, identity(), gens(), mul(a,b), key(e).
template <class Dom>
std::vector<typename Dom::Elem> enumerate_elements(
    Dom& dom, std::unordered_map<std::string, std::uint32_t>& index_of,
    std::size_t cap) {
  using Elem = typename Dom::Elem;
  std::vector<Elem> elems;
  elems.push_back(dom.identity());
  index_of.emplace(dom.key(elems[0]), 0);
  const auto gens = dom.gens();
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Elem& g : gens) {
      Elem next = dom.mul(elems[head], g);
      std::string k = dom.key(next);
      if (index_of.find(k) == index_of.end()) {
        if (elems.size() >= cap)
          throw GroupTooLarge("group enumeration exceeded element cap");
        index_of.emplace(std::move(k), static_cast<std::uint32_t>(elems.size()));
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

template <class Dom>
Group build_from_domain(Dom& dom, std::size_t cap) {
  std::unordered_map<std::string, std::uint32_t> index_of;
  auto elems = enumerate_elements(dom, index_of, cap);
  const std::uint32_t n = static_cast<std::uint32_t>(elems.size());

  Group g;
  g.n = n;
  g.mul.assign(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      auto it = index_of.find(dom.key(dom.mul(elems[a], elems[b])));
      if (it == index_of.end())
        throw InternalError("closure not multiplication-closed");
      g.mul[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }
  g.inv.assign(n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (g.at(a, b) == 0) {
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] == n)
      throw SpecInvalid("generators do not generate a group (missing inverse; non-invertible generator?)");
  }
  for (const auto& ge : dom.gens()) {
    g.gens.push_back(index_of.at(dom.key(ge)));
  }
  // a generator may equal the identity or repeat; keep indices unique, drop 0
  std::vector<std::uint32_t> uniq;
  for (auto gi : g.gens) {
    if (gi != 0 && std::find(uniq.begin(), uniq.end(), gi) == uniq.end()) uniq.push_back(gi);
  }
  g.gens = std::move(uniq);
  dom.stash_elements(g, elems);
  return g;
}

std::string u64_key(std::uint64_t v) {
  return std::string(reinterpret_cast<const char*>(&v), sizeof(v));
}

struct CyclicDom {
  using Elem = std::uint64_t;
  std::uint64_t n;
  Elem identity() const { return 0; }
  std::vector<Elem> gens() const { return n > 1 ? std::vector<Elem>{1} : std::vector<Elem>{}; }
  Elem mul(Elem a, Elem b) const { return (a + b) % n; }
  std::string key(Elem e) const { return u64_key(e); }
  void stash_elements(Group&, const std::vector<Elem>&) const {}
};

struct SemidirectDom {
  using Elem = std::pair<std::uint64_t, std::uint64_t>;  // (a in Z_pa, b in Z_pb)
  std::uint64_t pa, pb, r;
  // (a1,b1)(a2,b2) = (a1 + a2*r^b1 mod pa, b1 + b2 mod pb): conjugating the
  // C_pa generator by the C_pb generator raises it to the r-th power
  Elem identity() const { return {0, 0}; }
  std::vector<Elem> gens() const { return {{1, 0}, {0, 1}}; }
  Elem mul(Elem x, Elem y) const {
    std::uint64_t shift = pow_mod(r % pa, x.second, pa);
    return {(x.first + y.first % pa * shift) % pa, (x.second + y.second) % pb};
  }
  std::string key(Elem e) const { return u64_key(e.first * pb + e.second); }
  void stash_elements(Group&, const std::vector<Elem>&) const {}
};

struct ProductDom {
  using Elem = std::vector<std::uint32_t>;  // one index per factor
  std::vector<GroupPtr> parts;
  Elem identity() const { return Elem(parts.size(), 0); }
  std::vector<Elem> gens() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (auto gi : parts[i]->gens) {
        Elem e(parts.size(), 0);
        e[i] = gi;
        out.push_back(e);
      }
    }
    return out;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parts[i]->at(a[i], b[i]);
    return c;
  }
  std::string key(const Elem& e) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) v = v * parts[i]->n + e[i];
    return u64_key(v);
  }
  void stash_elements(Group&, const std::vector<Elem>&) const {}
};

struct MatrixDom {
  using Elem = std::vector<std::int32_t>;  // row-major dim*dim, entries in [0, mod)
  int dim;
  std::uint64_t mod;
  std::vector<Elem> generators;
  Elem identity() const {
    Elem e(static_cast<std::size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = 1;
    return e;
  }
  std::vector<Elem> gens() const { return generators; }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c(static_cast<std::size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) {
      for (int k = 0; k < dim; ++k) {
        std::int64_t aik = a[static_cast<std::size_t>(i) * dim + k];
        if (aik == 0) continue;
        for (int j = 0; j < dim; ++j) {
          std::int64_t v = c[static_cast<std::size_t>(i) * dim + j] +
                           aik * b[static_cast<std::size_t>(k) * dim + j];
          c[static_cast<std::size_t>(i) * dim + j] = static_cast<std::int32_t>(v % static_cast<std::int64_t>(mod));
        }
      }
    }
    return c;
  }
  std::string key(const Elem& e) const {
    return std::string(reinterpret_cast<const char*>(e.data()), e.size() * sizeof(std::int32_t));
  }
  void stash_elements(Group& g, const std::vector<Elem>& elems) const {
    g.realization = Group::Realization::matrices;
    g.real_dim = dim;
    g.real_modulus = mod;
    g.elems = elems;
  }
};

struct PermDom {
  using Elem = std::vector<std::int32_t>;  // images, (a*b)(i) = a[b[i]]
  int degree;
  std::vector<Elem> generators;
  Elem identity() const {
    Elem e(degree);
    for (int i = 0; i < degree; ++i) e[i] = i;
    return e;
  }
  std::vector<Elem> gens() const { return generators; }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c(degree);
    for (int i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  }
  std::string key(const Elem& e) const {
    return std::string(reinterpret_cast<const char*>(e.data()), e.size() * sizeof(std::int32_t));
  }
  void stash_elements(Group& g, const std::vector<Elem>& elems) const {
    g.realization = Group::Realization::permutations;
    g.real_dim = degree;
    g.elems = elems;
  }
};

void check_cap(std::uint64_t projected, std::size_t cap) {
  if (projected > cap) throw GroupTooLarge("projected order exceeds element cap");
}

}  // namespace

GroupPtr build_group(const GroupSpec& spec, const BuildOptions& opts) {
  Group g;
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: {
      if (spec.n < 1) throw SpecInvalid("cyclic: order must be >= 1");
      check_cap(spec.n, opts.element_cap);
      CyclicDom dom{spec.n};
      g = build_from_domain(dom, opts.element_cap);
      g.name = "cyclic(" + std::to_string(spec.n) + ")";
      break;
    }
    case GroupSpec::Kind::direct_product: {
      if (spec.factors.empty()) throw SpecInvalid("direct_product: needs at least one factor");
      ProductDom dom;
      std::uint64_t proj = 1;
      for (const auto& f : spec.factors) {
        dom.parts.push_back(build_group(f, opts));
        proj *= dom.parts.back()->n;
        check_cap(proj, opts.element_cap);
      }
      g = build_from_domain(dom, opts.element_cap);
      g.name = "product";
      break;
    }
    case GroupSpec::Kind::semidirect_cyclic: {
      if (spec.pa < 1 || spec.pb < 1) throw SpecInvalid("semidirect_cyclic: pa, pb must be >= 1");
      if (spec.r < 1 || spec.r >= std::max<std::uint64_t>(spec.pa, 2))
        throw SpecInvalid("semidirect_cyclic: r must lie in [1, pa)");
      if (gcd_u64(spec.r, spec.pa) != 1)
        throw SpecInvalid("semidirect_cyclic: r must be a unit mod pa");
      if (pow_mod(spec.r, spec.pb, spec.pa) != 1 % spec.pa)
        throw SpecInvalid("semidirect_cyclic: r^pb != 1 mod pa (action is not well defined)");
      check_cap(spec.pa * spec.pb, opts.element_cap);
      SemidirectDom dom{spec.pa, spec.pb, spec.r};
      g = build_from_domain(dom, opts.element_cap);
      g.name = "semidirect(" + std::to_string(spec.pa) + "," + std::to_string(spec.pb) + "," +
               std::to_string(spec.r) + ")";
      break;
    }
    case GroupSpec::Kind::matrix_group: {
      if (spec.dim < 1) throw SpecInvalid("matrix_group: dim must be >= 1");
      if (spec.modulus < 2 || spec.modulus > (1u << 30))
        throw SpecInvalid("matrix_group: modulus must lie in [2, 2^30]");
      if (spec.generators.empty()) throw SpecInvalid("matrix_group: needs generators");
      MatrixDom dom;
      dom.dim = spec.dim;
      dom.mod = spec.modulus;
      for (const auto& m : spec.generators) {
        if (m.size() != static_cast<std::size_t>(spec.dim) * spec.dim)
          throw SpecInvalid("matrix_group: generator has wrong entry count");
        MatrixDom::Elem e(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
          std::int64_t v = m[i] % static_cast<std::int64_t>(spec.modulus);
          if (v < 0) v += spec.modulus;
          e[i] = static_cast<std::int32_t>(v);
        }
        dom.generators.push_back(std::move(e));
      }
      g = build_from_domain(dom, opts.element_cap);
      g.name = "matrix(" + std::to_string(spec.dim) + " mod " + std::to_string(spec.modulus) + ")";
      break;
    }
    case GroupSpec::Kind::permutation_group: {
      if (spec.degree < 1) throw SpecInvalid("permutation_group: degree must be >= 1");
      if (spec.generators.empty()) throw SpecInvalid("permutation_group: needs generators");
      PermDom dom;
      dom.degree = spec.degree;
      for (const auto& im : spec.generators) {
        if (im.size() != static_cast<std::size_t>(spec.degree))
          throw SpecInvalid("permutation_group: image list has wrong length");
        std::vector<bool> seen(spec.degree, false);
        PermDom::Elem e(spec.degree);
        for (std::size_t i = 0; i < im.size(); ++i) {
          if (im[i] < 0 || im[i] >= spec.degree || seen[im[i]])
            throw SpecInvalid("permutation_group: images are not a bijection");
          seen[im[i]] = true;
          e[i] = static_cast<std::int32_t>(im[i]);
        }
        dom.generators.push_back(std::move(e));
      }
      g = build_from_domain(dom, opts.element_cap);
      g.name = "perm(deg " + std::to_string(spec.degree) + ")";
      break;
    }
    case GroupSpec::Kind::unitriangular: {
      if (spec.dim < 2) throw SpecInvalid("unitriangular: dim must be >= 2");
      if (!is_prime(spec.p)) throw SpecInvalid("unitriangular: p must be prime");
      std::uint64_t proj = 1;
      for (int i = 0; i < spec.dim * (spec.dim - 1) / 2; ++i) {
        proj *= spec.p;
        check_cap(proj, opts.element_cap);
      }
      MatrixDom dom;
      dom.dim = spec.dim;
      dom.mod = spec.p;
      for (int i = 0; i + 1 < spec.dim; ++i) {
        MatrixDom::Elem e(static_cast<std::size_t>(spec.dim) * spec.dim, 0);
        for (int d = 0; d < spec.dim; ++d) e[static_cast<std::size_t>(d) * spec.dim + d] = 1;
        e[static_cast<std::size_t>(i) * spec.dim + (i + 1)] = 1;
        dom.generators.push_back(std::move(e));
      }
      g = build_from_domain(dom, opts.element_cap);
      g.name = "UT(" + std::to_string(spec.dim) + "," + std::to_string(spec.p) + ")";
      break;
    }
    case GroupSpec::Kind::preset:
      throw SpecInvalid("preset '" + spec.name + "' must be resolved through the catalog");
  }
  return std::make_shared<Group>(std::move(g));
}

bool Subgroup::contains(std::uint32_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

ConjClassSet conjugacy_classes(const Group& g) {
  ConjClassSet out;
  out.class_of.assign(g.n, UINT32_MAX);
  for (std::uint32_t x = 0; x < g.n; ++x) {
    if (out.class_of[x] != UINT32_MAX) continue;
    const std::uint32_t ci = static_cast<std::uint32_t>(out.classes.size());
    ConjClass cls;
    cls.rep = x;
    std::deque<std::uint32_t> work{x};
    out.class_of[x] = ci;
    cls.members.push_back(x);
    while (!work.empty()) {
      std::uint32_t y = work.front();
      work.pop_front();
      for (auto gi : g.gens) {
        std::uint32_t z = g.at(g.at(g.inv[gi], y), gi);
        if (out.class_of[z] == UINT32_MAX) {
          out.class_of[z] = ci;
          cls.members.push_back(z);
          work.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::uint32_t element_order(const Group& g, std::uint32_t x) {
  std::uint32_t o = 1, y = x;
  while (y != 0) {
    y = g.at(y, x);
    ++o;
  }
  return o;
}

std::uint64_t exponent_of(const Group& g) {
  std::uint64_t e = 1;
  for (std::uint32_t x = 0; x < g.n; ++x) e = lcm_u64(e, element_order(g, x));
  return e;
}

bool is_abelian(const Group& g) {
  for (auto a : g.gens)
    for (auto b : g.gens)
      if (g.at(a, b) != g.at(b, a)) return false;
  return true;
}

Subgroup whole_group(GroupPtr g) {
  Subgroup s;
  s.parent = g;
  s.members.resize(g->n);
  for (std::uint32_t i = 0; i < g->n; ++i) s.members[i] = i;
  s.normal = true;
  return s;
}

Subgroup trivial_subgroup(GroupPtr g) {
  Subgroup s;
  s.parent = std::move(g);
  s.members = {0};
  s.normal = true;
  return s;
}

Subgroup center(GroupPtr g) {
  Subgroup s;
  s.parent = g;
  for (std::uint32_t x = 0; x < g->n; ++x) {
    bool central = true;
    for (auto gi : g->gens) {
      if (g->at(x, gi) != g->at(gi, x)) {
        central = false;
        break;
      }
    }
    if (central) s.members.push_back(x);
  }
  s.normal = true;
  return s;
}

Subgroup generated_subgroup(GroupPtr g, const std::vector<std::uint32_t>& seed) {
  std::vector<bool> in(g->n, false);
  std::vector<std::uint32_t> list{0};
  in[0] = true;
  // closure under right multiplication by the seed; a finite
  // multiplication-closed set containing 1 is a subgroup
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (auto s : seed) {
      std::uint32_t y = g->at(list[head], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  }
  Subgroup out;
  out.parent = g;
  out.members = std::move(list);
  std::sort(out.members.begin(), out.members.end());
  out.normal = is_normal_set(*g, out.members);
  return out;
}

Subgroup derived_subgroup(GroupPtr g) {
  std::vector<bool> seen(g->n, false);
  std::vector<std::uint32_t> comms;
  for (std::uint32_t x = 0; x < g->n; ++x) {
    for (std::uint32_t y = 0; y < g->n; ++y) {
      std::uint32_t c = g->at(g->at(g->inv[x], g->inv[y]), g->at(x, y));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  Subgroup d = generated_subgroup(g, comms);
  d.normal = true;
  return d;
}

Subgroup cyclic_subgroup(GroupPtr g, std::uint32_t x) {
  Subgroup s;
  s.parent = g;
  std::uint32_t y = 0;
  do {
    s.members.push_back(y);
    y = g->at(y, x);
  } while (y != 0);
  std::sort(s.members.begin(), s.members.end());
  s.normal = is_normal_set(*g, s.members);
  return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw InternalError("intersect: different parent groups");
  Subgroup out;
  out.parent = a.parent;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  out.normal = a.normal && b.normal ? true : is_normal_set(*a.parent, out.members);
  return out;
}

bool is_normal_set(const Group& g, const std::vector<std::uint32_t>& members_sorted) {
  for (auto gi : g.gens) {
    std::uint32_t gi_inv = g.inv[gi];
    for (auto m : members_sorted) {
      std::uint32_t c = g.at(g.at(gi_inv, m), gi);
      if (!std::binary_search(members_sorted.begin(), members_sorted.end(), c)) return false;
    }
  }
  return true;
}

bool subgroup_le(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

bool same_members(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }

std::vector<Subgroup> upper_central_series(GroupPtr g) {
  std::vector<Subgroup> series;
  series.push_back(trivial_subgroup(g));
  std::vector<bool> zmask(g->n, false);
  zmask[0] = true;
  std::size_t zsize = 1;
  while (zsize < g->n) {
    // next term: elements whose commutator with every generator lies in the
    // previous term (centralizing the generators mod Z_i centralizes G mod Z_i)
    std::vector<bool> next(g->n, false);
    std::size_t cnt = 0;
    for (std::uint32_t x = 0; x < g->n; ++x) {
      bool ok = true;
      for (auto gi : g->gens) {
        std::uint32_t c = g->at(g->at(g->inv[x], g->inv[gi]), g->at(x, gi));
        if (!zmask[c]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        next[x] = true;
        ++cnt;
      }
    }
    if (cnt == zsize) throw NotNilpotentError("upper central series stalled below G");
    Subgroup s;
    s.parent = g;
    for (std::uint32_t x = 0; x < g->n; ++x)
      if (next[x]) s.members.push_back(x);
    s.normal = true;
    series.push_back(std::move(s));
    zmask = std::move(next);
    zsize = cnt;
  }
  return series;
}

int nilpotency_class(GroupPtr g) {
  return static_cast<int>(upper_central_series(std::move(g)).size()) - 1;
}

QuotientResult quotient_group(GroupPtr g, const Subgroup& nrm) {
  if (nrm.parent != g) throw InternalError("quotient: subgroup of a different group");
  if (!nrm.normal && !is_normal_set(*g, nrm.members))
    throw NotNormalError("quotient: subgroup is not normal");

  QuotientResult res;
  res.coset_of.assign(g->n, UINT32_MAX);
  std::vector<std::uint32_t> reps;  // minimal element of each coset, in discovery order
  for (std::uint32_t x = 0; x < g->n; ++x) {
    if (res.coset_of[x] != UINT32_MAX) continue;
    std::uint32_t ci = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto m : nrm.members) res.coset_of[g->at(x, m)] = ci;
  }
  const std::uint32_t qn = static_cast<std::uint32_t>(reps.size());
  Group q;
  q.n = qn;
  q.mul.assign(static_cast<std::size_t>(qn) * qn, 0);
  for (std::uint32_t a = 0; a < qn; ++a)
    for (std::uint32_t b = 0; b < qn; ++b)
      q.mul[static_cast<std::size_t>(a) * qn + b] = res.coset_of[g->at(reps[a], reps[b])];
  q.inv.assign(qn, 0);
  for (std::uint32_t a = 0; a < qn; ++a) q.inv[a] = res.coset_of[g->inv[reps[a]]];
  for (auto gi : g->gens) {
    std::uint32_t im = res.coset_of[gi];
    if (im != 0 && std::find(q.gens.begin(), q.gens.end(), im) == q.gens.end())
      q.gens.push_back(im);
  }
  q.name = g->name + "/N" + std::to_string(nrm.order());
  res.group = std::make_shared<Group>(std::move(q));
  return res;
}

GroupPtr subgroup_to_group(const Subgroup& h) {
  const Group& g = *h.parent;
  const std::uint32_t m = h.order();
  std::vector<std::uint32_t> pos(g.n, UINT32_MAX);
  for (std::uint32_t i = 0; i < m; ++i) pos[h.members[i]] = i;
  Group s;
  s.n = m;
  s.mul.assign(static_cast<std::size_t>(m) * m, 0);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      std::uint32_t p = pos[g.at(h.members[a], h.members[b])];
      if (p == UINT32_MAX) throw InternalError("subgroup_to_group: member set not closed");
      s.mul[static_cast<std::size_t>(a) * m + b] = p;
    }
  }
  s.inv.assign(m, 0);
  for (std::uint32_t a = 0; a < m; ++a) s.inv[a] = pos[g.inv[h.members[a]]];
  // greedy minimal generating sequence over the member list
  std::vector<bool> in(m, false);
  in[0] = true;
  std::size_t covered = 1;
  for (std::uint32_t cand = 1; cand < m && covered < m; ++cand) {
    if (in[cand]) continue;
    s.gens.push_back(cand);
    std::vector<std::uint32_t> fresh;
    // re-close: extend current set by the new generator
    for (std::uint32_t x = 0; x < m; ++x)
      if (in[x]) fresh.push_back(x);
    for (std::size_t head = 0; head < fresh.size(); ++head) {
      for (auto gen : s.gens) {
        std::uint32_t y = s.mul[static_cast<std::size_t>(fresh[head]) * m + gen];
        if (!in[y]) {
          in[y] = true;
          ++covered;
          fresh.push_back(y);
        }
      }
    }
  }
  s.name = g.name + ".sub" + std::to_string(m);
  if (g.realization != Group::Realization::none) {
    s.realization = g.realization;
    s.real_dim = g.real_dim;
    s.real_modulus = g.real_modulus;
    s.elems.reserve(m);
    for (auto mem : h.members) s.elems.push_back(g.elems[mem]);
  }
  return std::make_shared<Group>(std::move(s));
}

std::vector<std::uint64_t> abelian_type(GroupPtr a) {
  if (!is_abelian(*a)) throw NotAbelianError("abelian_type: group is not abelian");
  std::vector<std::uint64_t> factors;
  GroupPtr cur = std::move(a);
  while (cur->n > 1) {
    // peel a maximal-order element; the complement is isomorphic to the quotient
    std::uint32_t best = 1, best_ord = element_order(*cur, 1);
    for (std::uint32_t x = 2; x < cur->n; ++x) {
      std::uint32_t o = element_order(*cur, x);
      if (o > best_ord) {
        best = x;
        best_ord = o;
      }
    }
    factors.push_back(best_ord);
    cur = quotient_group(cur, cyclic_subgroup(cur, best)).group;
  }
  std::reverse(factors.begin(), factors.end());  // ascending, d_i | d_{i+1}
  return factors;
}

bool is_elementary_abelian(GroupPtr a, std::uint64_t p) {
  if (!is_abelian(*a)) return false;
  if (a->n == 1) return true;
  for (auto d : abelian_type(a))
    if (d != p) return false;
  return true;
}

std::vector<std::uint64_t> member_mask(std::uint32_t n, const std::vector<std::uint32_t>& members) {
  std::vector<std::uint64_t> mask((n + 63) / 64, 0);
  for (auto m : members) mask[m >> 6] |= std::uint64_t(1) << (m & 63);
  return mask;
}

std::vector<std::uint32_t> mask_members(std::uint32_t n, const std::vector<std::uint64_t>& mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i)
    if (mask[i >> 6] >> (i & 63) & 1) out.push_back(i);
  return out;
}

}  // namespace charkern
