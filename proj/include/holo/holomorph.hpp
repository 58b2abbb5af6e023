#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/autos.hpp"
#include "holo/cayley.hpp"
#include "holo/gamma.hpp"
#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

namespace holo {

// Hol(G) = Aut(G) rho(G) acting on the element indices: the normalizer of
// the right regular representation in the symmetric group. Its order is
// |Aut(G)| * |G|, and the stabilizer of 0 is exactly Aut(G).
struct Holomorph {
  GroupPtr base;
  AutGroup aut;
  PermGroup rho;
  PermGroup group;
};

Holomorph holomorph(const GroupPtr& g, AutStrategy strategy = AutStrategy::Auto,
                    const AutBudget& budget = {});

struct ClassifyBudget {
  // Orders above this skip the isomorphism search; explicit hints and the
  // same-table / opposite-table shortcuts still apply.
  std::size_t max_iso_search_order = 512;
  std::size_t iso_max_nodes = 2'000'000;
  AutBudget aut_budget;
};

// One regular subgroup N of Hol(G), described by its gamma map, classified
// within the chain H(G), I(G), J(G):
//   in_j: Hol(G) normalizes N.
//   in_i: the full S(G)-normalizer of N equals Hol(G); decided through
//         |Aut(N)| = |Aut(G)| since the normalizer of a regular subgroup is
//         its own holomorph. nullopt when Aut(N) was out of budget.
//   in_h: additionally N is isomorphic to G. The witness theta is an
//         isomorphism from G onto (G, circ) fixing 0; as a permutation it
//         conjugates rho(G) onto N and normalizes Hol(G), both of which are
//         verified at construction.
struct RegularRecord {
  GammaMap gamma;
  CircStructure circ;
  bool in_j = false;
  std::optional<bool> in_i;
  std::optional<bool> in_h;
  std::optional<Perm> iso;
  std::string aut_circ_strategy;  // how |Aut(N)| was settled
};

RegularRecord classify_regular(const Holomorph& hol, const GammaMap& gamma,
                               std::optional<Perm> iso_hint = std::nullopt,
                               const ClassifyBudget& budget = {});

// The quotient of the normalizer of Hol(G) by Hol(G), realized through its
// regular conjugation action on a complete list of H(G)-records: entry
// (i, j) is the index k with N_i conjugated by theta_j equal to N_k. The
// records must all carry iso witnesses, be pairwise distinct, and start with
// the record of rho(G) itself (the trivial gamma), which acts as identity.
struct TGroupResult {
  std::vector<std::vector<std::uint32_t>> table;
  GroupPtr group;
  std::string structure;  // "C1", "C2", "C2^2", ...
};

TGroupResult t_group(const Holomorph& hol,
                     const std::vector<RegularRecord>& h_records);

}  // namespace holo
