#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "holo/perm.hpp"

namespace holo {

// One level of a stabilizer chain. The orbit of the base point is stored
// as a Schreier vector (BFS parent point + generator index), so coset
// representatives are rebuilt on demand instead of being stored as
// permutations. Keeps memory linear in degree per level.
struct ChainLevel {
  Point base = 0;
  std::vector<Point> orbit;            // BFS discovery order, orbit[0] == base
  std::vector<std::int32_t> where;     // point -> index in orbit, -1 outside
  std::vector<std::int32_t> parent;    // BFS predecessor point, -1 at base
  std::vector<std::int32_t> via_gen;   // generator index on edge parent -> point
  std::vector<Perm> gens;              // generators of this level's group
  std::vector<Perm> inv_gens;
};

struct StabChain {
  std::size_t degree = 0;
  std::vector<ChainLevel> levels;
  std::uint64_t order = 1;

  bool contains(const Perm& p) const;
  // Unique coset representative u with base^u == x at the given level.
  Perm representative(std::size_t level, Point x) const;
};

// Permutation group with lazily built deterministic stabilizer chain.
// Base points are always chosen as the smallest moved point available,
// and orbits are explored breadth-first with generators in index order,
// so every derived quantity is reproducible.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(std::size_t degree);  // trivial group
  PermGroup(std::size_t degree, std::vector<Perm> gens);

  static PermGroup symmetric(std::size_t degree);

  // The caller asserts |<gens>| == order on independent grounds; the chain
  // build stops early once the claimed order is reached. If a full build
  // finishes with a different order the claim was wrong and this throws.
  static PermGroup with_known_order(std::size_t degree, std::vector<Perm> gens,
                                    std::uint64_t order);

  // The given elements form the complete, closed element set of the group
  // (e.g. all solutions of a pointwise equation that is preserved under
  // composition). Order is the set size.
  static PermGroup from_element_set(std::size_t degree,
                                    std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }

  std::vector<Point> orbit(Point x) const;  // BFS order
  bool is_transitive() const;
  // Transitive with order equal to degree: every point stabilizer trivial.
  bool is_regular() const;

  // All elements in a fixed deterministic order. Throws BoundError when the
  // order exceeds cap.
  std::vector<Perm> elements(std::uint64_t cap = 1u << 20) const;

  // For a regular group: the unique element mapping 0 to x.
  Perm regular_element_mapping_zero_to(Point x) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool normalizes(const PermGroup& other) const;
  bool centralizes(const PermGroup& other) const;
  bool is_normal_in(const PermGroup& ambient) const;
  PermGroup conjugated_by(const Perm& t) const;
  bool same_group_as(const PermGroup& other) const;

  const StabChain& chain() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::optional<std::uint64_t> claimed_order_;
  mutable std::shared_ptr<const StabChain> chain_;
};

// <seed>^ambient: smallest subgroup containing seed and closed under
// conjugation by ambient's generators. seed must lie in ambient.
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seed);

PermGroup derived_subgroup(const PermGroup& g);

// Elements of g commuting with all of g. Enumerates g, so bounded by cap.
PermGroup center_of(const PermGroup& g, std::uint64_t cap = 1u << 18);

struct CentralizerBudget {
  // Exact orbit-propagation path for transitive groups, O(degree^2 * gens).
  std::size_t max_transitive_degree = 4096;
  // Generic backtrack over orbit roots for intransitive groups.
  std::size_t max_backtrack_degree = 64;
  std::uint64_t max_nodes = 1'000'000;
};

// Centralizer of g in the full symmetric group on g's points.
PermGroup centralizer_in_sym(const PermGroup& g,
                             const CentralizerBudget& budget = {});

struct NormalizerBudget {
  // Full-symmetric ambient: iterate all degree! permutations.
  std::size_t max_symmetric_degree = 8;
  // Otherwise iterate the ambient group's elements.
  std::uint64_t max_ambient_order = 10'000'000;
};

// Normalizer of h in ambient; h must be a subgroup of ambient.
PermGroup normalizer_in(const PermGroup& ambient, const PermGroup& h,
                        const NormalizerBudget& budget = {});

}  // namespace holo
