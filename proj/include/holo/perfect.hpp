#pragma once

#include <optional>
#include <vector>

#include "holo/holomorph.hpp"

namespace holo {

// One factor of the finest Aut-invariant direct decomposition of the inner
// automorphism group, together with its lift back into G.
struct KrsFactor {
  std::vector<Elt> inn_members;       // A_i inside Inn(G), sorted
  std::vector<Elt> preimage_members;  // full conjugation preimage in G
  std::vector<Elt> lifted_members;    // B_i: derived subgroup of the preimage
};

// Inn(G) = A_1 x ... x A_n with every A_i normal, Aut(G)-invariant, and
// minimal with those properties; the decomposition with these factors is
// unique. The lifts make G the central product B_1 ... B_n.
struct KrsDecomposition {
  GroupPtr base;
  QuotientResult inn;  // Inn(G) as the central quotient, with projection
  std::vector<KrsFactor> factors;
  // Component maps of the internal direct product: for a in Inn(G),
  // components[i][a] is its A_i coordinate.
  std::vector<std::vector<Elt>> components;
  // Canonical lift of each A_i coordinate into B_i (least preimage).
  std::vector<std::vector<Elt>> lift;
};

// Decomposes the inner automorphism group of a perfect group. Factors are
// found as inclusion-minimal subgroups generated by Aut-closed unions of
// conjugacy classes, then certified: pairwise commuting, pairwise trivial
// intersection, full product. Throws ScopeError when the inner quotient
// does not decompose this way.
KrsDecomposition krs_inn(const GroupPtr& g, const AutGroup& aut);

// Derived subgroup of the subgroup spanned by a member list, as the normal
// closure within it of the generator commutators. Sorted.
std::vector<Elt> derived_members_of(const GroupPtr& g,
                                    const std::vector<Elt>& members);

// The gamma map that reverses the chosen factors: gamma(g) = iota(h^{-1})
// with h the product of the B_i parts of g over the subset. The empty subset
// gives the trivial gamma; the full subset gives the lambda gamma.
GammaMap gamma_for_subset(const KrsDecomposition& krs,
                          const std::vector<std::uint32_t>& subset);

// The candidate conjugating isomorphism g = h u -> h^{-1} u for a subset.
// Well defined only when the relevant central overlap has exponent two;
// returns nullopt if the construction fails to produce a valid conjugator.
std::optional<Perm> theta_for_subset(const KrsDecomposition& krs,
                                     const std::vector<std::uint32_t>& subset);

struct PerfectJRecord {
  std::vector<std::uint32_t> subset;  // reversed factor indices, ascending
  RegularRecord record;
};

struct PerfectJEnumeration {
  KrsDecomposition krs;
  std::vector<PerfectJRecord> records;  // sorted by gamma encoding
};

// Enumerates J(G) for a perfect group: one record per subset of KRS factors,
// 2^n in total, all distinct. Throws ScopeError for non-perfect groups or
// more than 10 factors.
PerfectJEnumeration enumerate_j_perfect(const Holomorph& hol,
                                        const ClassifyBudget& budget = {});

// Structural split induced by an inner-valued gamma on a perfect group:
// K is the kernel of gamma, H the derived subgroup of the conjugation
// preimage of gamma(G). The booleans record the identities that make
// (H, K) a central-product splitting with gamma acting as inversion on H.
struct GammaSplit {
  std::vector<Elt> h_preimage;
  std::vector<Elt> h_members;
  std::vector<Elt> k_members;
  bool center_in_kernel = false;
  bool inn_is_product = false;   // Inn(G) = gamma(G) x iota(K)
  bool parts_commute = false;    // [H, K] = 1
  bool gamma_inverts_h = false;  // gamma = iota of the inverse on H
  bool product_covers = false;   // H K = G
  bool theta_defined = false;    // H meets K in exponent-two elements only

  bool all() const {
    return center_in_kernel && inn_is_product && parts_commute &&
           gamma_inverts_h && product_covers && theta_defined;
  }
};
GammaSplit split_from_gamma(const GammaMap& gm);

// Pairing of complementary subsets: conjugation by inversion carries the
// record of S onto the record of the complement, inversion is an
// isomorphism between the two twisted operations, and each nu image is the
// other's centralizer in the full symmetric group (checked when the degree
// fits the centralizer budget).
struct PairingReport {
  bool inversion_conjugates = false;
  bool inversion_is_circ_iso = false;
  bool centralizer_matches = false;
  bool centralizer_checked = false;
};
PairingReport pairing_check(const Holomorph& hol,
                            const PerfectJEnumeration& e,
                            const CentralizerBudget& budget = {});

// Rebuilds a central product with one factor replaced by its opposite group
// and exhibits an isomorphism back to the original through factorwise
// inversion. For an abelian factor the table does not change at all.
struct OppositeReplaceResult {
  GroupPtr group;
  bool table_unchanged = false;
  std::optional<Perm> iso;  // replacement group -> original, as index map
};
OppositeReplaceResult opposite_replace(const GroupPtr& g, bool right_factor);

}  // namespace holo
