#pragma once

#include "charkern/json_io.hpp"
#include "charkern/verifier.hpp"

namespace charkern {

// full structural report for one group: metadata, degree multiplicities,
// kernel profile, predicate profile, lattice summary; stable key order
ordered_json analyze_report(const GroupBundle& b);

// character table dump: class data plus every row as degree + cyclotomic
// multiplicity vectors (exponent -> coefficient on zeta_e^exponent)
ordered_json table_report(const GroupBundle& b);

}  // namespace charkern
