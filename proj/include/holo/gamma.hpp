#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holo/autos.hpp"
#include "holo/cayley.hpp"
#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

namespace holo {

// A map gamma: G -> Aut(G). The maps of interest satisfy the twisting law
// gamma(g) gamma(h) = gamma(g^{gamma(h)} h); they encode the regular
// subgroups of the holomorph through nu(g) = gamma(g) rho(g), acting as
// x^{nu(h)} = x circ h with x circ h = x^{gamma(h)} h.
//
// Two storage forms share one interface. When every value is an inner
// automorphism the map stores one conjugator per element, normalized to the
// least element of its center coset; values then compare, compose, and apply
// in O(1). Otherwise the distinct value permutations live in a dedup pool,
// which is fine for the small orders where non-inner values occur.
class GammaMap {
 public:
  using ValueId = std::uint32_t;

  // values[g] is the permutation gamma(g) of the element indices. Converts
  // to conjugator storage when every value is inner.
  static GammaMap from_perm_values(GroupPtr g, const std::vector<Perm>& values);
  // gamma(g) = iota(conjugators[g]).
  static GammaMap from_inner(GroupPtr g, const std::vector<Elt>& conjugators);
  // gamma(g) = id for all g; encodes rho(G) itself.
  static GammaMap trivial_style(GroupPtr g);
  // gamma(g) = iota(g^{-1}); encodes lambda(G), with circ the opposite group.
  static GammaMap lambda_style(GroupPtr g);

  const GroupPtr& group() const { return g_; }
  bool inner() const { return inner_; }

  ValueId value_id(Elt g) const { return id_of_[g]; }
  std::size_t value_count() const;
  Elt apply(ValueId v, Elt x) const;          // x^{gamma}
  Elt apply_inverse(ValueId v, Elt x) const;  // x^{gamma^{-1}}
  // Value of the composite "a then b" = gamma_a gamma_b. For pool storage the
  // composite may fall outside the pool, which callers treat as a failed law.
  std::optional<ValueId> compose(ValueId a, ValueId b) const;
  // The value beta^{-1} gamma beta, for an automorphism beta.
  std::optional<ValueId> conjugate_by_aut(ValueId v, const Perm& beta) const;
  Perm value_perm(ValueId v) const;
  // Conjugator storage only: the canonical c with gamma = iota(c).
  Elt inner_conjugator(ValueId v) const;
  // The id iota(c) would carry in this map's value space; nullopt when the
  // pool does not hold that permutation.
  std::optional<ValueId> inner_value_id(Elt c) const;

  Elt circ(Elt x, Elt y) const { return g_->mul(apply(id_of_[y], x), y); }

  // Injective over abstract maps on a fixed group, independent of storage
  // form; used for sorting and deduplication.
  std::vector<std::uint32_t> encoding() const;
  std::uint64_t hash() const;
  bool operator==(const GammaMap& o) const { return encoding() == o.encoding(); }

 private:
  GammaMap() = default;

  GroupPtr g_;
  bool inner_ = false;
  std::vector<ValueId> id_of_;  // element -> value id
  // Conjugator storage: value id is the canonical conjugator itself.
  std::vector<Elt> canon_;  // element -> least element of its center coset
  // Pool storage.
  std::vector<Perm> pool_;
  std::vector<Perm> pool_inv_;

  std::optional<ValueId> pool_lookup(const Perm& p) const;
};

// The twisting law check: gamma(0) = id, every value is an automorphism, and
// gamma(g) gamma(h) = gamma(g circ h) for all pairs. Exactly the condition
// for nu(G) to be a regular subgroup of the holomorph.
bool validate_gamma_regular(const GammaMap& gm);

// The normal-case criterion on top of the twisting law: gamma is an
// antihomomorphism, gamma(gh) = gamma(h) gamma(g), and it is equivariant
// under the full automorphism group, gamma(g^beta) = gamma(g)^beta. Checks
// equivariance on the generators of aut, which suffices.
bool validate_gamma_normal(const GammaMap& gm, const AutGroup& aut);

// Commutator identities that the normal case forces. All three report true
// for a gamma passing validate_gamma_normal:
//   aut_identity:        gamma(g^beta g^{-1}) = [gamma(g), beta]
//   inner_identity:      gamma(h^{-1} g h g^{-1}) = iota((h^{gamma(g)})^{-1} h)
//   central_congruence:  (h^{gamma(g)})^{-1} h  =  g (g^{-1})^{gamma(h^{-1})}
//                        up to a central factor
struct CommutatorIdentityReport {
  bool aut_identity = false;
  bool inner_identity = false;
  bool central_congruence = false;

  bool all() const {
    return aut_identity && inner_identity && central_congruence;
  }
};
CommutatorIdentityReport commutator_identity_check(const GammaMap& gm,
                                                   const AutGroup& aut);

// The compatibility law (g h) circ k = (g circ k) k^{-1} (h circ k) tying the
// two operations together. Exhaustive up to order 128, fixed-seed sampling
// above that.
bool skew_brace_check(const GammaMap& gm, std::size_t sample_cap = 1'000'000);

// x -> x circ h as a permutation; equals gamma(h) followed by rho(h).
Perm nu_perm(const GammaMap& gm, Elt h);

// The twisted group (G, circ) on the same index set, plus nu(G) as a
// permutation group. Construction validates the twisting law first.
struct CircStructure {
  GammaMap gamma;
  GroupPtr circ;
  PermGroup nu_image;
};
CircStructure circ_structure(const GammaMap& gm);

// Recovers gamma from a regular subgroup of S(G): gamma(h) is the unique
// n in N sending 0 to h, followed by rho(h)^{-1}. Prefers conjugator storage
// and falls back to the pool for small orders; throws BoundError when the
// values are not inner and the order exceeds the table cap. The result
// satisfies the twisting law iff N lies in the holomorph; callers validate.
GammaMap gamma_from_regular(const PermGroup& n, const GroupPtr& g);

}  // namespace holo
