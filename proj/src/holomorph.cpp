#include "holo/holomorph.hpp"

#include <algorithm>

#include "holo/errors.hpp"

namespace holo {

Holomorph holomorph(const GroupPtr& g, AutStrategy strategy,
                    const AutBudget& budget) {
  AutGroup aut = automorphism_group(g, strategy, budget);
  PermGroup rho = rho_rep(g);
  // An automorphism conjugates the translation rho(x) to rho(x^alpha);
  // anything else means the automorphism group is broken.
  for (const Perm& alpha : aut.perms.generators())
    for (Elt x : g->generating_set())
      if (rho_perm(*g, x).conjugated_by(alpha) != rho_perm(*g, alpha[x]))
        throw InvariantError("automorphism fails to normalize rho(G)");
  std::vector<Perm> gens = aut.perms.generators();
  for (const Perm& r : rho.generators()) gens.push_back(r);
  // Aut(G) meets rho(G) trivially (only the identity translation fixes 0),
  // so the product has order |Aut| * |G|.
  std::size_t order = aut.order() * g->order();
  PermGroup hol = PermGroup::with_known_order(g->order(), std::move(gens),
                                              order);
  return Holomorph{g, std::move(aut), std::move(rho), std::move(hol)};
}

namespace {

// theta must conjugate rho(y) to nu(theta(y)) for every y; checking the
// generators suffices since both sides are homomorphisms in y.
void verify_conjugator(const Holomorph& hol, const GammaMap& gamma,
                       const Perm& theta) {
  const CayleyGroup& g = *hol.base;
  for (Elt y : g.generating_set())
    if (rho_perm(g, y).conjugated_by(theta) != nu_perm(gamma, theta[y]))
      throw InvariantError("isomorphism does not conjugate rho onto nu");
}

}  // namespace

RegularRecord classify_regular(const Holomorph& hol, const GammaMap& gamma,
                               std::optional<Perm> iso_hint,
                               const ClassifyBudget& budget) {
  const GroupPtr& g = hol.base;
  RegularRecord rec{gamma, circ_structure(gamma)};

  // Membership of every conjugate of N's generators settles normality,
  // because Hol and N are both generated by the listed elements.
  rec.in_j = true;
  std::vector<Perm> hol_gens = hol.aut.perms.generators();
  for (const Perm& r : hol.rho.generators()) hol_gens.push_back(r);
  for (const Perm& h : hol_gens) {
    for (const Perm& n : rec.circ.nu_image.generators())
      if (!rec.circ.nu_image.contains(n.conjugated_by(h))) {
        rec.in_j = false;
        break;
      }
    if (!rec.in_j) break;
  }
  // Cross-check against the gamma-side criterion; the two are equivalent.
  if (rec.in_j != validate_gamma_normal(gamma, hol.aut))
    throw InvariantError(
        "normality of nu(G) disagrees with the gamma criterion");

  // Isomorphism witness G -> (G, circ).
  if (iso_hint) {
    verify_conjugator(hol, gamma, *iso_hint);
    rec.iso = std::move(iso_hint);
    rec.aut_circ_strategy = "iso_hint";
  } else if (same_multiplication(*g, *rec.circ.circ)) {
    rec.iso = Perm(g->order());
    rec.aut_circ_strategy = "same_table";
  } else if (same_multiplication(*opposite(g), *rec.circ.circ)) {
    // Inversion maps a group isomorphically onto its opposite.
    rec.iso = inversion_perm(*g);
    rec.aut_circ_strategy = "opposite_table";
  } else if (g->order() <= budget.max_iso_search_order) {
    try {
      rec.iso = isomorphism_search(*g, *rec.circ.circ, budget.iso_max_nodes);
      rec.aut_circ_strategy = rec.iso ? "iso_search" : "iso_search_negative";
    } catch (const BoundError&) {
      rec.aut_circ_strategy = "iso_search_out_of_nodes";
    }
  } else {
    rec.aut_circ_strategy = "iso_out_of_budget";
  }
  if (rec.iso) verify_conjugator(hol, gamma, *rec.iso);

  if (!rec.in_j) {
    rec.in_i = false;
    rec.in_h = false;
    return rec;
  }

  // The S(G)-normalizer of a regular subgroup is its abstract holomorph, so
  // with Hol(G) inside it equality comes down to |Aut(N)| = |Aut(G)|.
  if (rec.iso) {
    rec.in_i = true;
    rec.in_h = true;
  } else {
    rec.in_h = rec.aut_circ_strategy == "iso_search_negative"
                   ? std::optional<bool>(false)
                   : std::nullopt;
    if (rec.circ.circ->order() <= budget.aut_budget.max_brute_order) {
      AutGroup circ_aut = automorphism_group(rec.circ.circ, AutStrategy::Brute,
                                             budget.aut_budget);
      rec.in_i = circ_aut.order() == hol.aut.order();
      rec.aut_circ_strategy += "+aut_brute";
    } else {
      rec.in_i = std::nullopt;
    }
  }

  // A record in H conjugates the whole frame: theta normalizes Hol(G).
  if (rec.in_h.value_or(false))
    for (const Perm& h : hol_gens)
      if (!hol.group.contains(h.conjugated_by(*rec.iso)))
        throw InvariantError("H-record conjugator fails to normalize Hol(G)");

  return rec;
}

TGroupResult t_group(const Holomorph& hol,
                     const std::vector<RegularRecord>& h_records) {
  const std::size_t k = h_records.size();
  if (k == 0) throw Error("t_group needs at least the rho record");

  std::vector<std::vector<std::uint32_t>> enc;
  enc.reserve(k);
  for (const RegularRecord& r : h_records) {
    if (!r.iso || !r.in_h.value_or(false))
      throw Error("t_group needs H-records with iso witnesses");
    enc.push_back(r.gamma.encoding());
  }
  if (enc[0] != GammaMap::trivial_style(hol.base).encoding())
    throw Error("t_group expects the rho record first");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (enc[i] == enc[j]) throw Error("duplicate records in t_group input");

  // Conjugating record i by the witness of record j lands on another
  // H-record; identify it by the gamma encoding of the conjugated subgroup.
  std::vector<std::vector<std::uint32_t>> table(
      k, std::vector<std::uint32_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    const Perm& theta = *h_records[j].iso;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Perm> conj_gens;
      for (const Perm& n : h_records[i].circ.nu_image.generators())
        conj_gens.push_back(n.conjugated_by(theta));
      PermGroup moved = PermGroup::with_known_order(
          hol.base->order(), std::move(conj_gens), hol.base->order());
      std::vector<std::uint32_t> moved_enc =
          gamma_from_regular(moved, hol.base).encoding();
      bool found = false;
      for (std::size_t t = 0; t < k; ++t)
        if (enc[t] == moved_enc) {
          table[i][j] = static_cast<std::uint32_t>(t);
          found = true;
          break;
        }
      if (!found)
        throw InvariantError(
            "conjugate of an H-record escaped the record list; the list is "
            "not all of H(G)");
    }
  }

  // The table is a group table with the rho record as identity; building the
  // table group revalidates identity, Latin property, and associativity.
  std::vector<std::uint16_t> flat;
  flat.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      flat.push_back(static_cast<std::uint16_t>(table[i][j]));
  GroupPtr tg = make_table_group(std::move(flat), k, "t_group");

  std::string structure;
  bool exponent_two = true;
  std::uint32_t max_order = 1;
  for (Elt x = 0; x < tg->order(); ++x) {
    max_order = std::max(max_order, tg->element_order(x));
    if (tg->element_order(x) > 2) exponent_two = false;
  }
  if (k == 1) {
    structure = "C1";
  } else if (exponent_two) {
    std::uint32_t rank = 0;
    while ((1u << rank) < k) ++rank;
    structure = rank == 1 ? "C2" : "C2^" + std::to_string(rank);
  } else if (tg->is_abelian() && max_order == k) {
    structure = "C" + std::to_string(k);
  } else {
    structure = (tg->is_abelian() ? "abelian of order " : "order ") +
                std::to_string(k);
  }
  return TGroupResult{std::move(table), std::move(tg), std::move(structure)};
}

}  // namespace holo
