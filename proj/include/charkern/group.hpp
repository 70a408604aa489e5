#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charkern {

struct SpecInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNormalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAbelianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNilpotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Declarative construction recipe. Only the fields for the active kind are
// meaningful; the JSON parser (json_io) rejects anything else.
struct GroupSpec {
  enum class Kind {
    cyclic,            // n
    direct_product,    // factors
    semidirect_cyclic, // pa, pb, r   (C_pa x| C_pb, b a b^-1 = a^r)
    matrix_group,      // dim, modulus, generators (row-major, dim*dim each)
    permutation_group, // degree, generators (0-based image lists)
    unitriangular,     // dim, p
    preset,            // name (resolved by the catalog before building)
  };
  Kind kind = Kind::cyclic;
  std::uint64_t n = 0;
  std::vector<GroupSpec> factors;
  std::uint64_t pa = 0, pb = 0, r = 0;
  int dim = 0;
  std::uint64_t modulus = 0;
  std::vector<std::vector<std::int64_t>> generators;
  int degree = 0;
  std::uint64_t p = 0;
  std::string name;
};

struct BuildOptions {
  std::size_t element_cap = 20000;
};

// Finite group as a fully enumerated index table. Element 0 is the identity;
// the ordering is BFS from the identity, right-multiplying by the generators
// in spec order, so indices are reproducible for a given spec.
struct Group {
  std::uint32_t n = 1;
  std::vector<std::uint32_t> mul;   // flat n*n, mul[a*n + b] = a*b
  std::vector<std::uint32_t> inv;   // n entries
  std::vector<std::uint32_t> gens;  // generator indices (empty for the trivial group)
  std::string name;

  // Concrete realization kept for element labels and for serializing search
  // results: matrices (row-major, mod `real_modulus`) or permutation images.
  enum class Realization { none, matrices, permutations };
  Realization realization = Realization::none;
  int real_dim = 0;
  std::uint64_t real_modulus = 0;
  std::vector<std::vector<std::int32_t>> elems;

  std::uint32_t at(std::uint32_t a, std::uint32_t b) const {
    return mul[static_cast<std::size_t>(a) * n + b];
  }
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr build_group(const GroupSpec& spec, const BuildOptions& opts = {});

// Subgroup of a parent group, stored as the sorted member index list
// (members[0] == 0 always).
struct Subgroup {
  GroupPtr parent;
  std::vector<std::uint32_t> members;
  bool normal = false;

  std::uint32_t order() const { return static_cast<std::uint32_t>(members.size()); }
  bool contains(std::uint32_t x) const;
};

struct ConjClass {
  std::uint32_t rep = 0;                  // minimal member index
  std::vector<std::uint32_t> members;     // sorted
};

struct ConjClassSet {
  std::vector<ConjClass> classes;         // identity class first, then by rep
  std::vector<std::uint32_t> class_of;    // element -> class index
  std::size_t size() const { return classes.size(); }
};

ConjClassSet conjugacy_classes(const Group& g);

std::uint32_t element_order(const Group& g, std::uint32_t x);
std::uint64_t exponent_of(const Group& g);
bool is_abelian(const Group& g);

Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup center(GroupPtr g);
Subgroup derived_subgroup(GroupPtr g);
Subgroup cyclic_subgroup(GroupPtr g, std::uint32_t x);
// subgroup generated by `seed` (closure under multiplication)
Subgroup generated_subgroup(GroupPtr g, const std::vector<std::uint32_t>& seed);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal_set(const Group& g, const std::vector<std::uint32_t>& members_sorted);
bool subgroup_le(const Subgroup& a, const Subgroup& b);  // a <= b
bool same_members(const Subgroup& a, const Subgroup& b);

// 1 = Z_0 <= Z_1 <= ... <= Z_c = G. Throws NotNilpotentError if the series
// stalls below G (impossible for prime-power order).
std::vector<Subgroup> upper_central_series(GroupPtr g);
int nilpotency_class(GroupPtr g);

struct QuotientResult {
  GroupPtr group;
  std::vector<std::uint32_t> coset_of;  // parent element -> quotient element
};
QuotientResult quotient_group(GroupPtr g, const Subgroup& nrm);

// standalone copy of a subgroup (identity stays index 0; member order kept)
GroupPtr subgroup_to_group(const Subgroup& h);

// invariant factors d_1 | d_2 | ... | d_k, ascending, product = |A|
std::vector<std::uint64_t> abelian_type(GroupPtr a);
bool is_elementary_abelian(GroupPtr a, std::uint64_t p);

// Normal subgroups via the kernel-intersection closure (every normal subgroup
// is an intersection of irreducible character kernels). Sorted by order, then
// lexicographic member list. Defined in lattice.cpp.
struct CharacterTable;
std::vector<Subgroup> normal_subgroups(GroupPtr g, const CharacterTable& t);

// Independent brute-force enumeration of identity-containing class unions
// closed under multiplication (DFS with closure propagation). Used as the
// cross-check oracle for the lattice; same ordering contract.
std::vector<Subgroup> normal_subgroups_oracle(GroupPtr g, const ConjClassSet& cls);

// bitset helpers shared by the lattice and the verifier
std::vector<std::uint64_t> member_mask(std::uint32_t n, const std::vector<std::uint32_t>& members);
std::vector<std::uint32_t> mask_members(std::uint32_t n, const std::vector<std::uint64_t>& mask);

}  // namespace charkern
