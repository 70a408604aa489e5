#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charkern/catalog.hpp"
#include "charkern/chartab.hpp"
#include "charkern/group.hpp"
#include "charkern/invariants.hpp"
#include "charkern/json_io.hpp"

namespace charkern {

struct UnknownClaim : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Verdict { pass, fail, not_applicable };

struct VerdictReport {
  std::string claim_id;
  std::string group_name;
  Verdict verdict = Verdict::not_applicable;
  ordered_json witness;    // structured counterexample (always set on fail)
  std::string scope_note;  // unmet hypothesis, both-false note, or p=2 marker
};

// all checkable claim ids, stable order
const std::vector<std::string>& claim_registry();
bool is_known_claim(const std::string& id);

// Per-group computation shared by every claim: table, lattice, profiles and
// the frequently needed subgroups, built once.
struct GroupBundle {
  std::string name;
  GroupPtr group;
  CharacterTable table;
  std::vector<Subgroup> normals;
  KernelProfile kprof;
  PredicateProfile pprof;
  Subgroup zg;  // center
  Subgroup gp;  // derived subgroup
  std::uint64_t p = 0;  // 0 when |G| is not a prime power
  int k = 0;            // |G| = p^k
  int nclass = 1;
  bool abelian = true;
};

GroupBundle make_bundle(std::string name, GroupPtr g);

VerdictReport verify_claim(const std::string& claim_id, const GroupBundle& b);

struct CorpusResult {
  std::vector<VerdictReport> reports;                      // group-major order
  std::vector<std::pair<std::string, std::string>> errors;  // (group, message)
};

// cross product entries x claims; `jobs` parallelizes over entries only and
// never affects report order
CorpusResult verify_corpus(const std::vector<CorpusEntry>& entries,
                           const std::vector<std::string>& claims, const BuildOptions& build,
                           int jobs);

const char* verdict_name(Verdict v);
// {"reports": [...], "summary": per-claim counts, "errors": [...]}
ordered_json corpus_result_to_json(const CorpusResult& res,
                                   const std::vector<std::string>& claims);
// a fail counts against the run unless its scope note marks it exploratory
bool has_in_scope_fail(const CorpusResult& res);

}  // namespace charkern
