#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "charkern/group.hpp"

namespace charkern {

struct UnknownPreset : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbientTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
  std::vector<std::string> tags;
};

// named construction recipes; throws UnknownPreset
GroupSpec preset(const std::string& name);

struct PresetInfo {
  std::string name;
  std::uint64_t order;
  std::vector<std::string> tags;
};
// full registry in stable order, with advertised orders (tests pin these)
std::vector<PresetInfo> preset_registry();

// expand preset references (recursively through product factors)
GroupSpec resolve_spec(const GroupSpec& spec);

// registry entries restricted to the standard verification ranges:
// orders 9..729 at p = 3 and 25..625 at p = 5; p = 2 entries only on request
std::vector<CorpusEntry> default_corpus(bool include_p2 = false);

struct SearchOptions {
  std::uint64_t order = 0;
  std::optional<int> nilpotency;  // filter on nilpotency class if set
  std::size_t limit = 16;
  BuildOptions build;
};

// Subgroups of the ambient group generated by element pairs, in deterministic
// index order, deduplicated by element set; extended by a third generator only
// when the pair phase finishes below the limit. Entries carry concrete
// matrix/permutation generator specs (regular representation if the ambient
// group has no realization).
std::vector<CorpusEntry> search_subgroups(const GroupSpec& ambient, const SearchOptions& opt);

}  // namespace charkern
