// Corpus-wide gate for the whole pipeline. Eight numbered blocks, one
// [PASS]/[FAIL] line each; any failed check flips its block and the exit
// code. --jobs N (default 4) parallelizes the claim sweeps only — the
// table-exactness block is deliberately single-threaded so its time budget
// means something.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "charkern/catalog.hpp"
#include "charkern/chartab.hpp"
#include "charkern/cyclotomic.hpp"
#include "charkern/group.hpp"
#include "charkern/invariants.hpp"
#include "charkern/numeric.hpp"
#include "charkern/verifier.hpp"

using namespace charkern;

namespace {

int block_fails = 0;

#define REQUIRE(cond)                                                  \
  do {                                                                 \
    if (!(cond)) {                                                     \
      ++block_fails;                                                   \
      std::printf("  [FAIL] %s:%d  %s\n", __FILE__, __LINE__, #cond);  \
    }                                                                  \
  } while (0)

#define REQUIRE_MSG(cond, ...)                       \
  do {                                               \
    if (!(cond)) {                                   \
      ++block_fails;                                 \
      std::printf("  [FAIL] %s:%d  ", __FILE__, __LINE__); \
      std::printf(__VA_ARGS__);                      \
      std::printf("\n");                             \
    }                                                \
  } while (0)

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// everything the later blocks reuse, built once per corpus entry in block 1
struct Built {
  std::string name;
  GroupPtr g;
  CharacterTable t;
  Subgroup zg, gp;
  std::uint64_t p = 0;
  bool abelian = true;
};

const VerdictReport* find_report(const CorpusResult& res, const std::string& claim,
                                 const std::string& group) {
  for (const auto& r : res.reports)
    if (r.claim_id == claim && r.group_name == group) return &r;
  return nullptr;
}

int log_base(std::uint64_t p, std::uint64_t v) {
  int m = 0;
  while (v > 1 && v % p == 0) {
    v /= p;
    ++m;
  }
  return v == 1 ? m : -1;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = 4;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) jobs = std::atoi(argv[i + 1]);

  const auto corpus = default_corpus(false);
  std::vector<Built> built;
  std::map<std::string, const Built*> by_name;
  CorpusResult full;  // one full claims-by-corpus sweep, reused by blocks 3-5 and 7
  const auto& all_claims = claim_registry();
  int total_fails = 0;

  auto close_block = [&](int idx, const std::string& label) {
    std::printf("%s %d. %s\n", block_fails == 0 ? "[PASS]" : "[FAIL]", idx, label.c_str());
    total_fails += block_fails;
    block_fails = 0;
  };

  // 1. exact character tables for the whole corpus: row/column orthogonality
  //    in cyclotomic arithmetic, degree sum, class count, order windows
  {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& entry : corpus) {
      Built b;
      b.name = entry.name;
      b.g = build_group(resolve_spec(entry.spec));
      b.t = dixon_character_table(b.g);
      b.zg = center(b.g);
      b.gp = derived_subgroup(b.g);
      b.abelian = is_abelian(*b.g);
      const auto pp = prime_power(b.g->n);
      REQUIRE_MSG(pp.has_value(), "%s: order %u is not a prime power", b.name.c_str(), b.g->n);
      if (pp) {
        b.p = pp->p;
        const bool in_window = (pp->p == 3 && b.g->n >= 9 && b.g->n <= 729) ||
                               (pp->p == 5 && b.g->n >= 25 && b.g->n <= 625);
        REQUIRE_MSG(in_window, "%s: order %u outside the corpus windows", b.name.c_str(),
                    b.g->n);
      }

      const std::size_t r = b.t.num_rows();
      REQUIRE_MSG(r == b.t.num_classes(), "%s: %zu rows vs %zu classes", b.name.c_str(), r,
                  b.t.num_classes());
      std::uint64_t degsum = 0;
      for (const auto& row : b.t.rows) degsum += row.degree * row.degree;
      REQUIRE_MSG(degsum == b.g->n, "%s: degree squares sum to %llu, order is %u",
                  b.name.c_str(), static_cast<unsigned long long>(degsum), b.g->n);

      std::uint64_t bad_rows = 0, bad_cols = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
          const CycInt want =
              i == j ? cyc_from_int(b.t.e, BigInt(b.g->n)) : cyc_zero(b.t.e);
          if (!cyc_eq(row_inner(b.t, i, j), want)) ++bad_rows;
        }
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
          const std::uint64_t cent = b.g->n / b.t.classes.classes[i].members.size();
          const CycInt want = i == j ? cyc_from_int(b.t.e, BigInt(cent)) : cyc_zero(b.t.e);
          if (!cyc_eq(col_inner(b.t, i, j), want)) ++bad_cols;
        }
      REQUIRE_MSG(bad_rows == 0, "%s: %llu row-orthogonality violations", b.name.c_str(),
                  static_cast<unsigned long long>(bad_rows));
      REQUIRE_MSG(bad_cols == 0, "%s: %llu column-orthogonality violations", b.name.c_str(),
                  static_cast<unsigned long long>(bad_cols));
      built.push_back(std::move(b));
    }
    for (const auto& b : built) by_name[b.name] = &b;
    const double secs = seconds_since(t0);
    REQUIRE_MSG(secs < 300.0, "corpus tables took %.1fs, budget is 300s", secs);
    char label[128];
    std::snprintf(label, sizeof label,
                  "character tables exact on all %zu corpus groups (%.1fs single-threaded)",
                  built.size(), secs);
    close_block(1, label);
  }

  // 2. the kernel-intersection lattice equals the brute-force class-union
  //    enumeration on every corpus group with |G| <= 256
  {
    std::size_t checked = 0;
    for (const auto& b : built) {
      if (b.g->n > 256) continue;
      ++checked;
      auto closure = normal_subgroups(b.g, b.t);
      auto oracle = normal_subgroups_oracle(b.g, b.t.classes);
      std::set<std::vector<std::uint32_t>> cset, oset;
      for (const auto& s : closure) cset.insert(s.members);
      for (const auto& s : oracle) oset.insert(s.members);
      REQUIRE_MSG(cset == oset, "%s: lattice %zu vs oracle %zu", b.name.c_str(),
                  closure.size(), oracle.size());
    }
    REQUIRE(checked >= 20);
    char label[96];
    std::snprintf(label, sizeof label, "normal lattice matches oracle on %zu groups <= 256",
                  checked);
    close_block(2, label);
  }

  // shared claim sweep (jobs=1 so block 8 can compare against parallel runs)
  full = verify_corpus(corpus, all_claims, {}, 1);

  // 3. per-character facts hold for every corpus character: non-linear
  //    kernels meet trivially, [Z(chi),G] <= ker chi, ker chi < Z(chi)
  {
    REQUIRE(full.errors.empty());
    for (const auto& b : built) {
      const auto* l3 = find_report(full, "L2.3", b.name);
      const auto* l4 = find_report(full, "L2.4", b.name);
      const auto* l15 = find_report(full, "L2.15", b.name);
      REQUIRE(l3 && l4 && l15);
      if (!l3 || !l4 || !l15) continue;
      REQUIRE_MSG(l4->verdict == Verdict::pass, "%s: L2.4 %s", b.name.c_str(),
                  verdict_name(l4->verdict));
      REQUIRE_MSG(l15->verdict == Verdict::pass, "%s: L2.15 %s", b.name.c_str(),
                  verdict_name(l15->verdict));
      // trivial-intersection is quantified over non-linear rows, so abelian
      // entries gate out instead of passing vacuously
      const Verdict want3 = b.abelian ? Verdict::not_applicable : Verdict::pass;
      REQUIRE_MSG(l3->verdict == want3, "%s: L2.3 %s", b.name.c_str(),
                  verdict_name(l3->verdict));
    }
    close_block(3, "kernel/center facts hold for every corpus character");
  }

  // 4. the biconditional characterizations: zero fails, correct gating,
  //    and at least one genuine pass per claim
  {
    const std::vector<std::string> ids = {"L2.5",  "T2.8",  "L2.9",  "L2.10",
                                          "C2.11", "L2.12", "L2.13", "L2.14",
                                          "L3.3",  "L3.4",  "P3.5",  "P3.6"};
    for (const auto& id : ids) {
      std::size_t passes = 0;
      for (const auto& b : built) {
        const auto* r = find_report(full, id, b.name);
        REQUIRE(r != nullptr);
        if (!r) continue;
        REQUIRE_MSG(r->verdict != Verdict::fail, "%s on %s failed", id.c_str(),
                    b.name.c_str());
        if (r->verdict == Verdict::pass) ++passes;
      }
      REQUIRE_MSG(passes > 0, "%s never passes on the corpus", id.c_str());
    }
    // gating spot checks: the sk formula applies exactly to abelian groups,
    // the degree characterization exactly to |G'| = p
    for (const auto& b : built) {
      const auto* l12 = find_report(full, "L2.12", b.name);
      const auto* l9 = find_report(full, "L2.9", b.name);
      if (!l12 || !l9) continue;
      REQUIRE_MSG((l12->verdict == Verdict::not_applicable) == !b.abelian,
                  "%s: L2.12 gating (%s)", b.name.c_str(), verdict_name(l12->verdict));
      REQUIRE_MSG((l9->verdict == Verdict::not_applicable) == (b.gp.order() != b.p),
                  "%s: L2.9 gating (|G'| = %llu)", b.name.c_str(),
                  static_cast<unsigned long long>(b.gp.order()));
    }
    close_block(4, "biconditional characterizations: zero fails, gating correct");
  }

  // 5. the uniform-kernel-order equivalence: both directions on every
  //    non-abelian entry, with the expected witness and control, and the
  //    |G'| <= p^m consequence rechecked on every second-branch instance
  {
    std::size_t passes = 0, branch2_only = 0;
    for (const auto& b : built) {
      const auto* r = find_report(full, "T-MAIN", b.name);
      REQUIRE(r != nullptr);
      if (!r) continue;
      REQUIRE_MSG(r->verdict != Verdict::fail, "T-MAIN failed on %s", b.name.c_str());
      if (b.abelian) {
        REQUIRE(r->verdict == Verdict::not_applicable);
        continue;
      }
      if (r->verdict != Verdict::pass) continue;
      ++passes;
      // a pass always records both branch outcomes and the singleton skn
      REQUIRE(r->witness.contains("cond1") && r->witness.contains("cond2"));
      REQUIRE(r->witness.at("skn").size() == 1);
      const std::uint64_t knorm = r->witness.at("skn").at(0).get<std::uint64_t>();
      const int m = log_base(b.p, knorm);
      REQUIRE(m >= 1);
      const bool c1 = r->witness.value("cond1", false);
      const bool c2 = r->witness.value("cond2", false);
      if (c2 && !c1) {
        ++branch2_only;
        REQUIRE_MSG(b.gp.order() <= pow_u64(b.p, m),
                    "%s: second branch but |G'| = %llu > %llu", b.name.c_str(),
                    static_cast<unsigned long long>(b.gp.order()),
                    static_cast<unsigned long long>(pow_u64(b.p, m)));
      }
    }
    REQUIRE(passes >= 1);
    REQUIRE(branch2_only >= 1);
    // the advertised witness and control
    const auto* wit = find_report(full, "T-MAIN", "heisenberg-3-x-c3");
    REQUIRE(wit && wit->verdict == Verdict::pass && wit->witness.value("cond2", false));
    const auto* ctrl = find_report(full, "T-MAIN", "heisenberg-3");
    REQUIRE(ctrl && ctrl->verdict == Verdict::not_applicable);
    char label[96];
    std::snprintf(label, sizeof label,
                  "main equivalence: %zu passes, %zu second-branch consequence checks",
                  passes, branch2_only);
    close_block(5, label);
  }

  // 6. order-81 subgroup sweep inside the 6561-element unitriangular group:
  //    maximal class <=> kernel orders {1, 3}, with at least one witness
  {
    auto t0 = std::chrono::steady_clock::now();
    SearchOptions opt;
    opt.order = 81;
    opt.limit = 4096;
    const auto found = search_subgroups(preset("ut4-3"), opt);
    REQUIRE(!found.empty());
    std::size_t maximal = 0;
    for (const auto& e : found) {
      auto g = build_group(resolve_spec(e.spec));
      REQUIRE(g->n == 81);
      auto t = dixon_character_table(g);
      const auto skn = kernel_profile(g, t).skn;
      const bool is_maximal_class = nilpotency_class(g) == 3;
      const bool skn_13 = skn == std::vector<std::uint64_t>{1, 3};
      if (is_maximal_class) ++maximal;
      REQUIRE_MSG(is_maximal_class == skn_13, "%s: class %d but skn size %zu",
                  e.name.c_str(), nilpotency_class(g), skn.size());
    }
    REQUIRE(maximal >= 1);
    const auto sweep = verify_corpus(found, {"T2.16"}, {}, jobs);
    REQUIRE(sweep.errors.empty());
    std::size_t sweep_pass = 0;
    for (const auto& r : sweep.reports) {
      REQUIRE_MSG(r.verdict != Verdict::fail, "T2.16 failed on %s", r.group_name.c_str());
      if (r.verdict == Verdict::pass) ++sweep_pass;
    }
    REQUIRE(sweep_pass == maximal);
    const double secs = seconds_since(t0);
    REQUIRE_MSG(secs < 600.0, "subgroup sweep took %.1fs, budget is 600s", secs);
    char label[128];
    std::snprintf(label, sizeof label,
                  "order-81 sweep: %zu subgroups, %zu maximal-class witnesses, 0 "
                  "counterexamples (%.1fs)",
                  found.size(), maximal, secs);
    close_block(6, label);
  }

  // 7. the two vanishing-pair criteria agree on (G, Z(G)) for the whole
  //    corpus, and the center-character bijection holds on every instance
  {
    std::size_t pairs = 0, small_derived = 0;
    for (const auto& b : built) {
      bool gcp = false;
      try {
        gcp = is_gcp(b.g, b.zg, b.t);  // asserts both criteria agree internally
      } catch (const std::exception& ex) {
        REQUIRE_MSG(false, "%s: is_gcp raised: %s", b.name.c_str(), ex.what());
        continue;
      }
      const auto* r = find_report(full, "T2.19", b.name);
      REQUIRE(r != nullptr);
      if (!r) continue;
      REQUIRE_MSG(r->verdict != Verdict::fail, "T2.19 failed on %s", b.name.c_str());
      if (b.abelian) {
        REQUIRE(r->verdict == Verdict::not_applicable);
        continue;
      }
      if (gcp) {
        ++pairs;
        REQUIRE_MSG(r->verdict == Verdict::pass, "%s: vanishing pair but T2.19 %s",
                    b.name.c_str(), verdict_name(r->verdict));
      } else {
        REQUIRE(r->verdict == Verdict::not_applicable);
      }
      if (b.gp.order() == b.p) {
        ++small_derived;
        REQUIRE_MSG(gcp, "%s: |G'| = p but (G, Z) is not a vanishing pair", b.name.c_str());
      }
    }
    REQUIRE(pairs >= 1);
    REQUIRE(small_derived >= 1);
    char label[96];
    std::snprintf(label, sizeof label,
                  "vanishing-pair agreement on all groups; bijection on %zu pairs", pairs);
    close_block(7, label);
  }

  // 8. determinism: repeated full sweeps are byte-identical, and worker
  //    count never changes the report
  {
    const std::string base = corpus_result_to_json(full, all_claims).dump();
    const auto again = verify_corpus(corpus, all_claims, {}, 1);
    REQUIRE(corpus_result_to_json(again, all_claims).dump() == base);
    const auto parallel = verify_corpus(corpus, all_claims, {}, 8);
    REQUIRE(corpus_result_to_json(parallel, all_claims).dump() == base);
    close_block(8, "reports byte-identical across reruns and --jobs 1/8");
  }

  if (total_fails > 0) {
    std::printf("ACCEPTANCE: %d check(s) failed\n", total_fails);
    return 1;
  }
  std::printf("ACCEPTANCE: all blocks passed\n");
  return 0;
}
