#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charkern/cyclotomic.hpp"
#include "charkern/group.hpp"

namespace charkern {

struct SplitIncomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeNotSquare : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TableInconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse class matrix M_i with (M_i)_{jk} = a_ijk, the number of ways a fixed
// z in class k factors as x*y with x in class i, y in class j. The central
// character vector w_j = h_j chi(g_j)/chi(1) satisfies M_i w = w_i * w.
// This sign/index convention is fixed here once; orthogonality tests pin it.
struct ClassMatrix {
  std::uint32_t r = 0;
  // column k -> list of (row j, a_ijk)
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cols;
};

ClassMatrix class_matrix(const Group& g, const ConjClassSet& cls, std::uint32_t i);
// a_ijk for spot checks; computed from scratch, representative-independent
std::uint64_t class_coefficient(const Group& g, const ConjClassSet& cls, std::uint32_t i,
                                std::uint32_t j, std::uint32_t k);

struct PowerMaps {
  std::vector<std::uint32_t> order;          // order of class representative
  std::vector<std::vector<std::uint32_t>> pm;  // pm[i][t] = class of rep_i^t, t < order[i]
  std::vector<std::uint32_t> inverse_class;

  std::uint32_t power_class(std::uint32_t i, std::uint64_t t) const {
    return pm[i][t % order[i]];
  }
};
PowerMaps power_maps(const Group& g, const ConjClassSet& cls);

// One irreducible character: degree, mod-q values per class, and the exact
// eigenvalue-multiplicity vectors (sparse (j, m): m eigenvalues zeta_e^j).
struct CharacterRow {
  std::uint64_t degree = 1;
  std::vector<std::uint64_t> modq;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> mult;
};

struct CharacterTable {
  GroupPtr group;
  ConjClassSet classes;
  PowerMaps pmaps;
  ModField field;
  std::uint64_t e = 1;  // group exponent; the ring of every value
  std::vector<CharacterRow> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_classes() const { return classes.size(); }
  // exact value chi_r(g) on class c, built on demand from the multiplicities
  CycInt value(std::size_t r, std::size_t c) const;
};

// Full Dixon-Schneider run: class matrices over F_q, simultaneous eigenspace
// splitting (class matrices in index order), degree recovery, exact lift.
// Retries with the next admissible prime on internal inconsistency (cap 5).
CharacterTable dixon_character_table(GroupPtr g);

// {g : chi(g) = chi(1)} resp. {g : |chi(g)| = chi(1)} as subgroups
Subgroup kernel_of(const CharacterTable& t, std::size_t r);
Subgroup center_of_char(const CharacterTable& t, std::size_t r);
bool vanishes_at(const CharacterTable& t, std::size_t r, std::size_t c);

// exact inner products (class-size weighted over classes resp. over rows)
CycInt row_inner(const CharacterTable& t, std::size_t r1, std::size_t r2);
CycInt col_inner(const CharacterTable& t, std::size_t c1, std::size_t c2);

}  // namespace charkern
