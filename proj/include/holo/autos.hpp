#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/cayley.hpp"
#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

namespace holo {

// The automorphism group of a Cayley-backed group, realized as permutations
// of the element indices.
struct AutGroup {
  GroupPtr base;
  PermGroup perms;
  std::string strategy;  // "brute", "factorwise", or "factorwise_swap"

  std::size_t order() const { return perms.order(); }
};

enum class AutStrategy { Auto, Brute, Factorwise };

struct AutBudget {
  std::size_t max_brute_order = 512;
  std::size_t max_nodes = 4'000'000;
};

// Computes the full automorphism group. The brute strategy enumerates all
// automorphisms by backtracking over generator images and works for any group
// up to max_brute_order. The factorwise strategy requires the group to be a
// central or direct product of two quasisimple factors; it assembles Aut from
// the factor automorphism groups plus a factor swap when the factors are
// isomorphic. Auto picks brute for small orders and factorwise otherwise,
// throwing ScopeError when neither applies.
AutGroup automorphism_group(const GroupPtr& g,
                            AutStrategy strategy = AutStrategy::Auto,
                            const AutBudget& budget = {});

// The inner automorphism group. Its order is |G| / |Z(G)|.
PermGroup inner_automorphisms(const GroupPtr& g);

// Checks the homomorphism property of p on all element pairs.
bool is_automorphism(const CayleyGroup& g, const Perm& p);

// True when p acts trivially on the central quotient, i.e. x^{-1} p(x) is
// central for every x.
bool is_central_automorphism(const CayleyGroup& g, const Perm& p);

// True when every generator of aut maps the member set onto itself.
bool is_characteristic(const AutGroup& aut, const std::vector<Elt>& members);

// True when the group is perfect and its central quotient is simple.
bool is_quasisimple(const GroupPtr& g);

// Extends the map gens[i] -> images[i] to a bijective homomorphism from src
// onto dst, verifying the homomorphism property on every (element, generator)
// pair, which forces it on the whole generated subgroup. Returns nullopt when
// the extension is inconsistent, fails to be injective, or the generators do
// not generate src. Orders of src and dst must agree.
std::optional<Perm> extend_hom(const CayleyGroup& src, const CayleyGroup& dst,
                               const std::vector<Elt>& gens,
                               const std::vector<Elt>& images);

// Searches for an isomorphism from a to b, returned as an index bijection.
// Fast structural invariants are compared first; the backtracking phase then
// assigns generator images in ascending candidate order, so the witness is
// deterministic (lexicographically least in the generator image tuple).
// Throws BoundError when the node budget runs out before the search space is
// exhausted.
std::optional<Perm> isomorphism_search(const CayleyGroup& a,
                                       const CayleyGroup& b,
                                       std::size_t max_nodes = 2'000'000);

}  // namespace holo
