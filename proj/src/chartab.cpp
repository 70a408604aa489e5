#include "charkern/chartab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charkern/numeric.hpp"

namespace charkern {

ClassMatrix class_matrix(const Group& g, const ConjClassSet& cls, std::uint32_t i) {
  const std::uint32_t r = static_cast<std::uint32_t>(cls.size());
  ClassMatrix m;
  m.r = r;
  m.cols.resize(r);
  std::vector<std::uint32_t> dense(r, 0);
  for (std::uint32_t k = 0; k < r; ++k) {
    std::fill(dense.begin(), dense.end(), 0);
    const std::uint32_t z = cls.classes[k].rep;
    for (auto x : cls.classes[i].members) {
      // x*y = z forces y; count by the class of y
      dense[cls.class_of[g.at(g.inv[x], z)]]++;
    }
    for (std::uint32_t j = 0; j < r; ++j)
      if (dense[j]) m.cols[k].emplace_back(j, dense[j]);
  }
  return m;
}

std::uint64_t class_coefficient(const Group& g, const ConjClassSet& cls, std::uint32_t i,
                                std::uint32_t j, std::uint32_t k) {
  std::uint64_t count = 0;
  const std::uint32_t z = cls.classes[k].rep;
  for (auto x : cls.classes[i].members)
    if (cls.class_of[g.at(g.inv[x], z)] == j) ++count;
  return count;
}

PowerMaps power_maps(const Group& g, const ConjClassSet& cls) {
  PowerMaps pm;
  const std::size_t r = cls.size();
  pm.order.resize(r);
  pm.pm.resize(r);
  pm.inverse_class.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint32_t rep = cls.classes[i].rep;
    std::uint32_t y = 0;
    do {
      pm.pm[i].push_back(cls.class_of[y]);
      y = g.at(y, rep);
    } while (y != 0);
    pm.order[i] = static_cast<std::uint32_t>(pm.pm[i].size());
    pm.inverse_class[i] = pm.pm[i][(pm.order[i] - 1) % pm.order[i]];
  }
  return pm;
}

namespace {

struct Fq {
  std::uint64_t q;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q; }
  std::uint64_t neg(std::uint64_t a) const { return a ? q - a : 0; }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, q); }
};

// ambient-space basis in reduced column-echelon form; vecs[t][pivots[t]] = 1
// and every other basis vector vanishes on that row, so coordinates of any
// vector in the span can be read off at the pivot rows
struct Basis {
  std::vector<std::vector<std::uint64_t>> vecs;
  std::vector<std::uint32_t> pivots;
  std::size_t dim() const { return vecs.size(); }
};

Basis rref_basis(std::vector<std::vector<std::uint64_t>> raw, const Fq& F) {
  Basis b;
  for (auto& v : raw) {
    for (std::size_t t = 0; t < b.vecs.size(); ++t) {
      std::uint64_t c = v[b.pivots[t]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, b.vecs[t][j]));
    }
    std::uint32_t piv = UINT32_MAX;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        piv = static_cast<std::uint32_t>(j);
        break;
      }
    }
    if (piv == UINT32_MAX) throw TableInconsistent("dependent vectors while forming subspace basis");
    std::uint64_t s = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, s);
    for (std::size_t t = 0; t < b.vecs.size(); ++t) {
      std::uint64_t c = b.vecs[t][piv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        b.vecs[t][j] = F.sub(b.vecs[t][j], F.mul(c, v[j]));
    }
    b.vecs.push_back(std::move(v));
    b.pivots.push_back(piv);
  }
  // stable presentation: order vectors by pivot row
  std::vector<std::size_t> idx(b.vecs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) { return b.pivots[a] < b.pivots[c]; });
  Basis out;
  for (auto i : idx) {
    out.vecs.push_back(std::move(b.vecs[i]));
    out.pivots.push_back(b.pivots[i]);
  }
  return out;
}

std::vector<std::uint64_t> apply_sparse(const ClassMatrix& m, const std::vector<std::uint64_t>& v,
                                        const Fq& F) {
  std::vector<std::uint64_t> out(m.r, 0);
  for (std::uint32_t k = 0; k < m.r; ++k) {
    if (v[k] == 0) continue;
    for (auto [row, a] : m.cols[k]) out[row] = (out[row] + a % F.q * v[k]) % F.q;
  }
  return out;
}

// A restricted to the subspace, row-major d*d: column j = coords of M*b_j
std::vector<std::uint64_t> restrict_matrix(const ClassMatrix& m, const Basis& b, const Fq& F) {
  const std::size_t d = b.dim();
  std::vector<std::uint64_t> A(d * d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    auto u = apply_sparse(m, b.vecs[j], F);
    for (std::size_t t = 0; t < d; ++t) A[t * d + j] = u[b.pivots[t]];
  }
  return A;
}

// monic minimal polynomial (ascending coeffs) of e_seed under A, Krylov + echelon
std::vector<std::uint64_t> krylov_minpoly(const std::vector<std::uint64_t>& A, std::size_t d,
                                          std::size_t seed, const Fq& F) {
  std::vector<std::vector<std::uint64_t>> rows, reps;
  std::vector<std::uint32_t> pivots;
  std::vector<std::uint64_t> v(d, 0);
  v[seed] = 1;
  for (std::size_t k = 0;; ++k) {
    std::vector<std::uint64_t> w = v, rep(k + 1, 0);
    rep[k] = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      std::uint64_t c = w[pivots[t]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d; ++j) w[j] = F.sub(w[j], F.mul(c, rows[t][j]));
      for (std::size_t j = 0; j < reps[t].size(); ++j) rep[j] = F.sub(rep[j], F.mul(c, reps[t][j]));
    }
    std::uint32_t piv = UINT32_MAX;
    for (std::size_t j = 0; j < d; ++j) {
      if (w[j] != 0) {
        piv = static_cast<std::uint32_t>(j);
        break;
      }
    }
    if (piv == UINT32_MAX) return rep;  // rep[k] = 1: already monic
    std::uint64_t s = F.inv(w[piv]);
    for (auto& x : w) x = F.mul(x, s);
    for (auto& x : rep) x = F.mul(x, s);
    rows.push_back(std::move(w));
    reps.push_back(std::move(rep));
    pivots.push_back(piv);
    // next Krylov vector v = A * v
    std::vector<std::uint64_t> nv(d, 0);
    for (std::size_t t = 0; t < d; ++t) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc = (acc + A[t * d + j] * v[j]) % F.q;
      nv[t] = acc;
    }
    v = std::move(nv);
    if (k > d) throw TableInconsistent("krylov failed to terminate");
  }
}

std::vector<std::uint64_t> poly_roots_scan(const std::vector<std::uint64_t>& poly, const Fq& F) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < F.q; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % F.q;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// kernel basis of (A - lambda I), subspace coordinates, RREF free-column style
std::vector<std::vector<std::uint64_t>> eigen_kernel(std::vector<std::uint64_t> A, std::size_t d,
                                                     std::uint64_t lambda, const Fq& F) {
  for (std::size_t i = 0; i < d; ++i) A[i * d + i] = F.sub(A[i * d + i], lambda);
  std::vector<std::uint32_t> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < d; ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t row = rank; row < d; ++row) {
      if (A[row * d + col] != 0) {
        sel = row;
        break;
      }
    }
    if (sel == SIZE_MAX) continue;
    if (sel != rank)
      for (std::size_t j = 0; j < d; ++j) std::swap(A[sel * d + j], A[rank * d + j]);
    std::uint64_t s = F.inv(A[rank * d + col]);
    for (std::size_t j = 0; j < d; ++j) A[rank * d + j] = F.mul(A[rank * d + j], s);
    for (std::size_t row = 0; row < d; ++row) {
      if (row == rank) continue;
      std::uint64_t c = A[row * d + col];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d; ++j) A[row * d + j] = F.sub(A[row * d + j], F.mul(c, A[rank * d + j]));
    }
    pivot_col_of_row.push_back(static_cast<std::uint32_t>(col));
    ++rank;
  }
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> kernel;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> k(d, 0);
    k[f] = 1;
    for (std::size_t row = 0; row < rank; ++row) k[pivot_col_of_row[row]] = F.neg(A[row * d + f]);
    kernel.push_back(std::move(k));
  }
  return kernel;
}

// permutation structure of a class matrix, if it is one: sigma[k] = row of
// the single unit entry in column k
std::vector<std::uint32_t> as_permutation(const ClassMatrix& m) {
  std::vector<std::uint32_t> sigma(m.r);
  std::vector<bool> hit(m.r, false);
  for (std::uint32_t k = 0; k < m.r; ++k) {
    if (m.cols[k].size() != 1 || m.cols[k][0].second != 1) return {};
    std::uint32_t row = m.cols[k][0].first;
    if (hit[row]) return {};
    hit[row] = true;
    sigma[k] = row;
  }
  return sigma;
}

// eigenbasis of a permutation matrix on the full space via cycle structure:
// for Mv = lambda v, walking a cycle forward multiplies the entry by 1/lambda
std::vector<Basis> perm_split(const std::vector<std::uint32_t>& sigma, const ModField& f, const Fq& F) {
  const std::uint32_t r = static_cast<std::uint32_t>(sigma.size());
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<bool> seen(r, false);
  for (std::uint32_t s = 0; s < r; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> cyc;
    std::uint32_t x = s;
    do {
      seen[x] = true;
      cyc.push_back(x);
      x = sigma[x];
    } while (x != s);
    cycles.push_back(std::move(cyc));
  }
  std::set<std::uint64_t> lambdas;
  for (const auto& cyc : cycles) {
    const std::uint64_t c = cyc.size();
    if (f.e % c != 0) throw TableInconsistent("permutation cycle length does not divide the exponent");
    const std::uint64_t wc = pow_mod(f.omega, f.e / c, f.q);
    std::uint64_t l = 1;
    for (std::uint64_t s = 0; s < c; ++s) {
      lambdas.insert(l);
      l = F.mul(l, wc);
    }
  }
  std::vector<Basis> out;
  for (auto lambda : lambdas) {
    const std::uint64_t linv = F.inv(lambda);
    std::vector<std::vector<std::uint64_t>> vecs;
    for (const auto& cyc : cycles) {
      if (pow_mod(lambda, cyc.size(), F.q) != 1) continue;
      std::vector<std::uint64_t> v(r, 0);
      std::uint64_t val = 1;
      for (auto idx : cyc) {
        v[idx] = val;
        val = F.mul(val, linv);
      }
      vecs.push_back(std::move(v));
    }
    if (!vecs.empty()) out.push_back(rref_basis(std::move(vecs), F));
  }
  return out;
}

std::vector<Basis> split_subspace(const Basis& V, const ClassMatrix& m, const ModField& f, const Fq& F) {
  const std::size_t d = V.dim();
  const std::size_t r = m.r;
  if (d == r) {
    auto sigma = as_permutation(m);
    if (!sigma.empty()) return perm_split(sigma, f, F);
  }
  auto A = restrict_matrix(m, V, F);

  std::map<std::uint64_t, std::vector<std::vector<std::uint64_t>>> found;  // lambda -> kernel (subspace coords)
  std::size_t covered = 0;
  // echelon of all found eigenvectors, to pick seeds outside their span
  std::vector<std::vector<std::uint64_t>> span;
  std::vector<std::uint32_t> span_piv;
  auto absorb = [&](const std::vector<std::uint64_t>& vec) {
    std::vector<std::uint64_t> w = vec;
    for (std::size_t t = 0; t < span.size(); ++t) {
      std::uint64_t c = w[span_piv[t]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d; ++j) w[j] = F.sub(w[j], F.mul(c, span[t][j]));
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (w[j] != 0) {
        std::uint64_t s = F.inv(w[j]);
        for (auto& x : w) x = F.mul(x, s);
        span.push_back(w);
        span_piv.push_back(static_cast<std::uint32_t>(j));
        return true;
      }
    }
    return false;
  };

  std::size_t seed = 0;
  while (covered < d) {
    // a coordinate vector outside the span of found eigenvectors
    while (seed < d) {
      std::vector<std::uint64_t> probe(d, 0);
      probe[seed] = 1;
      std::vector<std::uint64_t> w = probe;
      bool in_span = true;
      for (std::size_t t = 0; t < span.size(); ++t) {
        std::uint64_t c = w[span_piv[t]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < d; ++j) w[j] = F.sub(w[j], F.mul(c, span[t][j]));
      }
      for (auto x : w)
        if (x != 0) in_span = false;
      if (!in_span) break;
      ++seed;
    }
    if (seed >= d) throw SplitIncomplete("no seed outside the found eigenspaces");
    auto mp = krylov_minpoly(A, d, seed, F);
    bool progress = false;
    for (auto lambda : poly_roots_scan(mp, F)) {
      if (found.count(lambda)) continue;
      auto K = eigen_kernel(A, d, lambda, F);
      if (K.empty()) continue;
      covered += K.size();
      for (const auto& k : K) absorb(k);
      found.emplace(lambda, std::move(K));
      progress = true;
    }
    if (!progress) throw SplitIncomplete("matrix not diagonalizable over this field");
  }

  std::vector<Basis> out;
  for (auto& [lambda, K] : found) {
    std::vector<std::vector<std::uint64_t>> amb;
    for (const auto& k : K) {
      std::vector<std::uint64_t> v(r, 0);
      for (std::size_t t = 0; t < d; ++t) {
        if (k[t] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) v[j] = (v[j] + k[t] * V.vecs[t][j]) % F.q;
      }
      amb.push_back(std::move(v));
    }
    out.push_back(rref_basis(std::move(amb), F));
  }
  return out;
}

struct LiftContext {
  const ModField& f;
  const Fq& F;
  const PowerMaps& pm;
  std::vector<std::int32_t> dlog;  // dlog[omega^j] = j, else -1
};

std::vector<std::pair<std::uint32_t, std::uint32_t>> lift_multiplicities(
    const LiftContext& ctx, const std::vector<std::uint64_t>& modq, std::uint64_t degree,
    std::uint32_t cls_idx) {
  const std::uint64_t e = ctx.f.e;
  const std::uint32_t o = ctx.pm.order[cls_idx];
  const std::uint64_t stride = e / o;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> jm;
  if (degree == 1) {
    std::int32_t j = ctx.dlog[modq[cls_idx]];
    if (j < 0) throw TableInconsistent("linear value is not a root of unity mod q");
    jm.emplace_back(static_cast<std::uint32_t>(j), 1);
    return jm;
  }
  // inverse DFT of length o: eigenvalues of the representing matrix at g are
  // o-th roots of unity, multiplicities sit on the stride-e/o lattice
  const std::uint64_t wo_inv = inv_mod(pow_mod(ctx.f.omega, stride, ctx.f.q), ctx.f.q);
  const std::uint64_t o_inv = inv_mod(o, ctx.f.q);
  std::uint64_t total = 0;
  for (std::uint32_t jp = 0; jp < o; ++jp) {
    std::uint64_t acc = 0;
    std::uint64_t wpow = 1;  // wo_inv^(jp*a)
    const std::uint64_t step = pow_mod(wo_inv, jp, ctx.f.q);
    for (std::uint32_t a = 0; a < o; ++a) {
      acc = (acc + modq[ctx.pm.pm[cls_idx][a]] * wpow) % ctx.f.q;
      wpow = ctx.F.mul(wpow, step);
    }
    std::uint64_t mval = ctx.F.mul(acc, o_inv);
    if (mval == 0) continue;
    if (mval > degree) throw TableInconsistent("eigenvalue multiplicity exceeds the degree");
    total += mval;
    jm.emplace_back(static_cast<std::uint32_t>(jp * stride), static_cast<std::uint32_t>(mval));
  }
  if (total != degree) throw TableInconsistent("eigenvalue multiplicities do not sum to the degree");
  // reconstruction check at t = 1
  std::uint64_t recon = 0;
  for (auto [j, mv] : jm) recon = (recon + pow_mod(ctx.f.omega, j, ctx.f.q) * mv) % ctx.f.q;
  if (recon != modq[cls_idx]) throw TableInconsistent("lifted multiplicities disagree with mod-q value");
  return jm;
}

std::vector<CharacterRow> dixon_attempt(const Group& g, const ConjClassSet& cls,
                                        const PowerMaps& pm, const ModField& f) {
  const std::uint32_t r = static_cast<std::uint32_t>(cls.size());
  const Fq F{f.q};

  std::vector<Basis> subspaces;
  {
    std::vector<std::vector<std::uint64_t>> id(r, std::vector<std::uint64_t>(r, 0));
    for (std::uint32_t i = 0; i < r; ++i) id[i][i] = 1;
    subspaces.push_back(rref_basis(std::move(id), F));
  }
  auto all_split = [&] {
    for (const auto& b : subspaces)
      if (b.dim() > 1) return false;
    return true;
  };
  for (std::uint32_t i = 1; i < r && !all_split(); ++i) {
    auto m = class_matrix(g, cls, i);
    std::vector<Basis> next;
    for (auto& V : subspaces) {
      if (V.dim() == 1) {
        next.push_back(std::move(V));
        continue;
      }
      for (auto& part : split_subspace(V, m, f, F)) next.push_back(std::move(part));
    }
    subspaces = std::move(next);
  }
  if (!all_split()) throw SplitIncomplete("class matrices exhausted with a subspace of dim > 1");

  // central character vectors, normalized to w_0 = 1
  std::vector<std::uint64_t> hinv(r);
  for (std::uint32_t j = 0; j < r; ++j) hinv[j] = inv_mod(cls.classes[j].members.size() % f.q, f.q);

  LiftContext ctx{f, F, pm, std::vector<std::int32_t>(f.q, -1)};
  {
    std::uint64_t w = 1;
    for (std::uint64_t j = 0; j < f.e; ++j) {
      ctx.dlog[w] = static_cast<std::int32_t>(j);
      w = F.mul(w, f.omega);
    }
  }

  std::vector<CharacterRow> rows;
  std::uint64_t degree_square_sum = 0;
  for (const auto& V : subspaces) {
    const auto& v = V.vecs[0];
    if (v[0] == 0) throw TableInconsistent("central character vector vanishes on the identity class");
    const std::uint64_t scale = F.inv(v[0]);
    std::vector<std::uint64_t> w(r);
    for (std::uint32_t j = 0; j < r; ++j) w[j] = F.mul(v[j], scale);

    // 1/norm: sum_j w_j conj(w_j) / h_j = |G| / chi(1)^2 in F_q
    std::uint64_t s = 0;
    for (std::uint32_t j = 0; j < r; ++j)
      s = (s + F.mul(F.mul(w[j], w[pm.inverse_class[j]]), hinv[j])) % f.q;
    if (s == 0) throw DegreeNotSquare("degree normalization sum vanished mod q");
    const std::uint64_t d2 = F.mul(g.n % f.q, F.inv(s));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= g.n; ++d) {
      if (F.mul(d % f.q, d % f.q) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw DegreeNotSquare("no integer degree in (0, sqrt|G|] matches mod q");

    CharacterRow row;
    row.degree = degree;
    row.modq.resize(r);
    for (std::uint32_t j = 0; j < r; ++j) row.modq[j] = F.mul(degree % f.q, F.mul(w[j], hinv[j]));
    row.mult.resize(r);
    for (std::uint32_t j = 0; j < r; ++j) row.mult[j] = lift_multiplicities(ctx, row.modq, degree, j);
    degree_square_sum += degree * degree;
    rows.push_back(std::move(row));
  }
  if (degree_square_sum != g.n)
    throw TableInconsistent("sum of squared degrees does not match the group order");

  std::sort(rows.begin(), rows.end(), [](const CharacterRow& a, const CharacterRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.modq < b.modq;
  });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].modq == rows[i - 1].modq) throw TableInconsistent("two identical character rows");
  return rows;
}

}  // namespace

CycInt CharacterTable::value(std::size_t r, std::size_t c) const {
  return cyc_from_mult(e, rows[r].mult[c]);
}

CharacterTable dixon_character_table(GroupPtr g) {
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(*g);
  t.pmaps = power_maps(*g, t.classes);
  t.e = exponent_of(*g);
  t.field = choose_field(g->n, t.e);

  for (int attempt = 0;; ++attempt) {
    try {
      t.rows = dixon_attempt(*g, t.classes, t.pmaps, t.field);
      return t;
    } catch (const SplitIncomplete&) {
      if (attempt >= 4) throw;
    } catch (const DegreeNotSquare&) {
      if (attempt >= 4) throw;
    } catch (const TableInconsistent&) {
      if (attempt >= 4) throw;
    }
    t.field = next_field(t.field, g->n);
  }
}

Subgroup kernel_of(const CharacterTable& t, std::size_t r) {
  const auto& row = t.rows[r];
  Subgroup k;
  k.parent = t.group;
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    const auto& jm = row.mult[c];
    if (jm.size() == 1 && jm[0].first == 0 && jm[0].second == row.degree) {
      const auto& mem = t.classes.classes[c].members;
      k.members.insert(k.members.end(), mem.begin(), mem.end());
    }
  }
  std::sort(k.members.begin(), k.members.end());
  k.normal = true;
  return k;
}

Subgroup center_of_char(const CharacterTable& t, std::size_t r) {
  const auto& row = t.rows[r];
  Subgroup z;
  z.parent = t.group;
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    const auto& jm = row.mult[c];
    if (jm.size() == 1 && jm[0].second == row.degree) {
      const auto& mem = t.classes.classes[c].members;
      z.members.insert(z.members.end(), mem.begin(), mem.end());
    }
  }
  std::sort(z.members.begin(), z.members.end());
  z.normal = true;
  return z;
}

bool vanishes_at(const CharacterTable& t, std::size_t r, std::size_t c) {
  return cyc_is_zero(t.value(r, c));
}

namespace {

// inner products accumulate as multiplicity convolutions over Z[x]/(x^e - 1)
// and reduce mod Phi_e once at the end; int64 is exact here because the total
// mass is at most |G| * d1 * d2 <= |G|^2 and the groups are desk scale
CycInt accumulated_inner(const CharacterTable& t, std::vector<std::int64_t> acc) {
  std::int64_t peak = 0;
  for (auto v : acc) peak = std::max(peak, v);
  auto pp = prime_power(t.e);
  if (t.e == 1 || (pp && peak < (std::int64_t(1) << 40))) {
    auto red = reduce_mod_cyclotomic_i64(std::move(acc), t.e);
    CycInt out;
    out.e = t.e;
    out.c.assign(red.begin(), red.end());
    return out;
  }
  std::vector<BigInt> big(acc.begin(), acc.end());
  CycInt out;
  out.e = t.e;
  out.c = reduce_mod_cyclotomic(std::move(big), t.e);
  return out;
}

}  // namespace

CycInt row_inner(const CharacterTable& t, std::size_t r1, std::size_t r2) {
  std::vector<std::int64_t> acc(t.e, 0);
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    const std::int64_t h = static_cast<std::int64_t>(t.classes.classes[c].members.size());
    for (auto [j1, m1] : t.rows[r1].mult[c])
      for (auto [j2, m2] : t.rows[r2].mult[c])
        acc[(j1 + t.e - j2) % t.e] += h * static_cast<std::int64_t>(m1) * m2;
  }
  return accumulated_inner(t, std::move(acc));
}

CycInt col_inner(const CharacterTable& t, std::size_t c1, std::size_t c2) {
  std::vector<std::int64_t> acc(t.e, 0);
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    for (auto [j1, m1] : t.rows[r].mult[c1])
      for (auto [j2, m2] : t.rows[r].mult[c2])
        acc[(j1 + t.e - j2) % t.e] += static_cast<std::int64_t>(m1) * m2;
  }
  return accumulated_inner(t, std::move(acc));
}

}  // namespace charkern
