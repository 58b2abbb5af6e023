#pragma once

#include <cstddef>
#include <vector>

#include "holo/gamma.hpp"
#include "holo/holomorph.hpp"
#include "holo/perm_group.hpp"

namespace holo {

// Caps for the brute-force searches. They exist to validate the structural
// machinery on tiny instances, not to scale.
struct SearchBudget {
  std::size_t max_group_order = 24;
  std::size_t max_nodes = 5'000'000;
};

struct OracleHit {
  GammaMap gamma;
  PermGroup nu;  // the regular subgroup itself
};

struct OracleEnumeration {
  std::vector<OracleHit> hits;  // sorted by gamma encoding
  std::size_t nodes_used = 0;
};

// Every regular subgroup of Hol(G), found by backtracking over gamma tables:
// gamma(0) = id, values range over all of Aut(G), and each assigned pair
// (g, h) forces gamma(g^{gamma(h)} h) = gamma(g) gamma(h). A completed table
// has the law verified on all pairs, so its nu image is a regular subgroup,
// and distinct tables give distinct subgroups. Throws BoundError over budget.
OracleEnumeration enumerate_regular_in_hol(const Holomorph& hol,
                                           const SearchBudget& budget = {});

// Filters the full enumeration down to the subgroups normalized by Hol(G),
// by literal conjugation of each hit with every holomorph generator.
OracleEnumeration enumerate_j_bruteforce(const Holomorph& hol,
                                         const SearchBudget& budget = {});

// Independent cross-check that never touches gamma machinery: breadth-first
// closure search over the subgroup lattice of Hol(G), keeping subgroups whose
// order divides |G| and returning the regular ones of full order.
std::vector<PermGroup> regular_subgroups_by_closure(
    const Holomorph& hol, const SearchBudget& budget = SearchBudget{16, 5'000'000});

// Whether the normalizer of a regular N inside the full symmetric group is
// exactly Hol(G). Decided by the order shortcut: the normalizer of a regular
// subgroup is a holomorph of it, so it equals Hol(G) iff |Aut(N)| = |Aut(G)|.
// At degree <= 8 the literal normalizer is computed as well; a mismatch with
// the shortcut throws InvariantError.
bool normalizer_equals_hol(const Holomorph& hol, const PermGroup& n);

}  // namespace holo
