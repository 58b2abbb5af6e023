#include "holo/acceptance.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "holo/autos.hpp"
#include "holo/catalog.hpp"
#include "holo/errors.hpp"
#include "holo/gamma.hpp"
#include "holo/holomorph.hpp"
#include "holo/oracle.hpp"
#include "holo/perfect.hpp"

namespace holo {
namespace {

// Collects failed conditions; a case stops adding detail once it failed a
// few times so the report stays one line per case.
struct Checker {
  bool ok = true;
  int reported = 0;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (reported < 4) {
      if (reported) why << "; ";
      why << what;
    }
    ++reported;
  }
};

AcceptanceCase verdict(const Checker& c, const std::string& success) {
  AcceptanceCase a;
  a.pass = c.ok;
  a.detail = c.ok ? success : c.why.str();
  return a;
}

PermGroup lambda_group(const GroupPtr& g) {
  std::vector<Perm> gens;
  for (Elt x : g->generating_set()) gens.push_back(lambda_perm(*g, x));
  return PermGroup(g->order(), std::move(gens));
}

std::vector<std::string> catalog_specs_up_to_120() {
  std::vector<std::string> specs;
  for (std::size_t n = 1; n <= 120; ++n)
    specs.push_back("cyclic:" + std::to_string(n));
  for (std::size_t n = 4; n <= 120; n += 2)
    specs.push_back("dihedral:" + std::to_string(n));
  for (std::size_t n : {8, 16, 32, 64})
    specs.push_back("quaternion:" + std::to_string(n));
  for (std::size_t n = 2; n <= 5; ++n)
    specs.push_back("sym:" + std::to_string(n));
  for (std::size_t n = 3; n <= 5; ++n)
    specs.push_back("alt:" + std::to_string(n));
  for (std::size_t q : {2, 3, 4, 5}) specs.push_back("sl:2," + std::to_string(q));
  for (std::size_t q : {2, 3, 4, 5})
    specs.push_back("psl:2," + std::to_string(q));
  specs.push_back("direct(cyclic:2,cyclic:2)");
  specs.push_back("direct(direct(cyclic:2,cyclic:2),cyclic:2)");
  specs.push_back("direct(sym:3,cyclic:4)");
  specs.push_back("direct(alt:4,cyclic:2)");
  specs.push_back("central(sl:2,3,cyclic:4)");
  specs.push_back("direct(alt:5,cyclic:2)");
  return specs;
}

// Right and left translations are each other's full centralizers, the
// holomorph order is the automorphism count times the group order, and
// conjugation by inversion exchanges the two translation groups. For orders
// up to 8 the holomorph is additionally compared against the literal
// normalizer computed by iterating the whole symmetric group.
AcceptanceCase case_translation_duality() {
  Checker c;
  const std::vector<std::string> specs = catalog_specs_up_to_120();
  std::size_t literal = 0;
  for (const std::string& spec : specs) {
    GroupPtr g = named_group(spec);
    const std::size_t n = g->order();
    Holomorph hol = holomorph(g);
    PermGroup lam = lambda_group(g);
    c.require(centralizer_in_sym(hol.rho).same_group_as(lam),
              spec + ": centralizer of the right translations is not the left ones");
    c.require(centralizer_in_sym(lam).same_group_as(hol.rho),
              spec + ": centralizer of the left translations is not the right ones");
    c.require(hol.group.order() == hol.aut.order() * n,
              spec + ": holomorph order is not |Aut| * |G|");
    Perm inv = inversion_perm(*g);
    std::vector<Perm> conj;
    for (const Perm& p : hol.rho.generators())
      conj.push_back(p.conjugated_by(inv));
    c.require(PermGroup(n, std::move(conj)).same_group_as(lam),
              spec + ": inversion does not carry the right translations onto the left ones");
    if (n >= 2 && n <= 8) {
      c.require(
          normalizer_in(PermGroup::symmetric(n), hol.rho).same_group_as(hol.group),
          spec + ": literal normalizer disagrees with the holomorph");
      ++literal;
    }
    if (!c.ok) break;
  }
  std::ostringstream s;
  s << specs.size()
    << " catalog groups of order <= 120: centralizer duality, order product, "
       "and inversion conjugation all hold; "
    << literal << " literal symmetric-group normalizers cross-checked";
  return verdict(c, s.str());
}

// The order-4 cyclic group: holomorph of order 8, exactly two subgroups
// normalized by it, and the non-translation one is a Klein group whose full
// normalizer is all of S4, so it is normalized by strictly more than the
// holomorph.
AcceptanceCase case_cyclic_four_chain() {
  Checker c;
  GroupPtr g = named_group("cyclic:4");
  Holomorph hol = holomorph(g);
  c.require(hol.group.order() == 8, "holomorph order is not 8");
  OracleEnumeration j = enumerate_j_bruteforce(hol);
  c.require(j.hits.size() == 2, "the holomorph does not normalize exactly 2 regular subgroups");
  std::size_t in_i = 0, in_h = 0;
  bool klein_seen = false;
  for (const OracleHit& hit : j.hits) {
    RegularRecord rec = classify_regular(hol, hit.gamma);
    c.require(rec.in_j, "a conjugation-stable subgroup failed the two-law criterion");
    if (rec.in_i.value_or(false)) ++in_i;
    if (rec.in_h.value_or(false)) ++in_h;
    if (!rec.in_h.value_or(false)) {
      klein_seen = true;
      GroupPtr klein = named_group("direct(cyclic:2,cyclic:2)");
      c.require(isomorphism_search(*rec.circ.circ, *klein).has_value(),
                "the extra subgroup is not a Klein group");
      PermGroup norm = normalizer_in(PermGroup::symmetric(4), hit.nu);
      c.require(norm.order() == 24, "the Klein member's normalizer is not all of S4");
      c.require(!rec.in_i.value_or(true), "the Klein member wrongly claims an exact normalizer");
    }
  }
  c.require(klein_seen, "no non-translation member found");
  c.require(in_i == 1 && in_h == 1, "the exact-normalizer and isomorphic-copy counts are not both 1");
  return verdict(c,
                 "|Hol| = 8 with 2 normalized regular subgroups; the Klein one has full "
                 "S4 normalizer, leaving 1 with exact normalizer and 1 isomorphic copy");
}

// The dihedral group of order 16 shares its holomorph with the generalized
// quaternion group of order 16: twisting by the automorphism that centrally
// shifts the reflections produces a regular quaternion subgroup, normal in
// the holomorph, with the same automorphism count, while the two groups
// themselves are not isomorphic.
AcceptanceCase case_dihedral_quaternion_sixteen() {
  Checker c;
  GroupPtr g = named_group("dihedral:16");
  Holomorph hol = holomorph(g);
  Elt r = 0;
  for (Elt x = 0; x < g->order(); ++x)
    if (g->element_order(x) == 8) {
      r = x;
      break;
    }
  c.require(g->element_order(r) == 8, "no element of order 8");
  std::vector<char> rot(g->order(), 0);
  Elt p = 0;
  for (int k = 0; k < 8; ++k) {
    rot[p] = 1;
    p = g->mul(p, r);
  }
  Elt z = g->mul(g->mul(r, r), g->mul(r, r));
  std::vector<Point> im(g->order());
  for (Elt x = 0; x < g->order(); ++x) im[x] = rot[x] ? x : g->mul(z, x);
  Perm alpha(std::move(im));
  c.require(is_automorphism(*g, alpha), "the central shift of the reflections is not an automorphism");
  std::vector<Perm> values;
  values.reserve(g->order());
  Perm id(g->order());
  for (Elt x = 0; x < g->order(); ++x) values.push_back(rot[x] ? id : alpha);
  GammaMap gm = GammaMap::from_perm_values(g, values);
  c.require(validate_gamma_regular(gm), "the twist violates the twisting law");
  c.require(validate_gamma_normal(gm, hol.aut), "the twisted subgroup is not normalized by the holomorph");
  RegularRecord rec = classify_regular(hol, gm);
  c.require(rec.in_j, "classification does not confirm normality");
  GroupPtr q16 = named_group("quaternion:16");
  c.require(isomorphism_search(*rec.circ.circ, *q16).has_value(),
            "the twisted group is not a generalized quaternion group");
  c.require(automorphism_group(rec.circ.circ).order() == hol.aut.order(),
            "automorphism counts differ");
  c.require(normalizer_equals_hol(hol, rec.circ.nu_image),
            "the normalizer order shortcut denies equal normalizers");
  c.require(!isomorphism_search(*g, *q16).has_value(),
            "the dihedral and quaternion groups came out isomorphic");
  return verdict(c,
                 "a regular quaternion subgroup of order 16 is normal in the dihedral "
                 "holomorph with matching automorphism count, hence the same full "
                 "normalizer, yet is not isomorphic to the base");
}

// The alternating group on 5 letters admits only the two translation
// subgroups, both isomorphic copies, and its normalizer quotient is C2.
// The automorphism group is computed by plain backtracking here.
AcceptanceCase case_alternating_five() {
  Checker c;
  GroupPtr g = named_group("alt:5");
  Holomorph hol = holomorph(g, AutStrategy::Brute);
  c.require(hol.aut.order() == 120, "brute-force automorphism count is not 120");
  PerfectJEnumeration e = enumerate_j_perfect(hol);
  c.require(e.records.size() == 2, "more than the two translation subgroups appeared");
  PermGroup lam = lambda_group(g);
  bool rho_seen = false, lam_seen = false;
  std::vector<RegularRecord> recs;
  for (const PerfectJRecord& r : e.records) {
    c.require(r.record.in_h.value_or(false), "a normalized subgroup is not an isomorphic copy");
    if (r.record.circ.nu_image.same_group_as(hol.rho)) rho_seen = true;
    if (r.record.circ.nu_image.same_group_as(lam)) lam_seen = true;
    recs.push_back(r.record);
  }
  c.require(rho_seen && lam_seen, "the two records are not the right and left translations");
  if (c.ok) {
    TGroupResult t = t_group(hol, recs);
    c.require(t.structure == "C2", "the normalizer quotient is not C2");
  }
  return verdict(c,
                 "the normalized regular subgroups are exactly the right and left "
                 "translations, both isomorphic copies, with normalizer quotient C2; "
                 "brute automorphism count 120");
}

// Two non-isomorphic simple factors: the product of the alternating group of
// order 60 with the simple group of order 168 has exactly 4 normalized
// regular subgroups, one per factor subset, all isomorphic copies, and the
// normalizer quotient is elementary abelian of order 4.
AcceptanceCase case_two_simple_factors() {
  Checker c;
  GroupPtr g = named_group("direct(alt:5,psl:2,7)");
  Holomorph hol = holomorph(g, AutStrategy::Factorwise);
  PerfectJEnumeration e = enumerate_j_perfect(hol);
  c.require(e.records.size() == 4, "expected exactly 4 normalized regular subgroups");
  c.require(e.krs.factors.size() == 2, "expected 2 invariant factors");
  std::vector<RegularRecord> recs;
  for (const PerfectJRecord& r : e.records) {
    c.require(r.record.in_h.value_or(false), "a record is not an isomorphic copy");
    recs.push_back(r.record);
  }
  if (c.ok) {
    TGroupResult t = t_group(hol, recs);
    c.require(t.structure == "C2^2",
              "the normalizer quotient is not elementary abelian of order 4");
  }
  return verdict(c,
                 "order 10080 with 2 invariant factors: 4 records, all isomorphic "
                 "copies, normalizer quotient C2^2");
}

// The double cover of the order-60 simple group: nontrivial center, two
// normalized regular subgroups, all values of both gammas inner, and every
// record passes the antihomomorphism-equivariance laws, the compatibility
// law, and the commutator identities. The upper central series stops at the
// center.
AcceptanceCase case_binary_icosahedral() {
  Checker c;
  GroupPtr g = named_group("sl:2,5");
  Holomorph hol = holomorph(g);
  PerfectJEnumeration e = enumerate_j_perfect(hol);
  c.require(e.records.size() == 2, "expected exactly 2 normalized regular subgroups");
  for (const PerfectJRecord& r : e.records) {
    const GammaMap& gm = r.record.gamma;
    c.require(validate_gamma_normal(gm, hol.aut), "a record fails the normal-case laws");
    c.require(skew_brace_check(gm), "a record fails the compatibility law");
    c.require(commutator_identity_check(gm, hol.aut).all(),
              "a record fails the commutator identities");
    c.require(gm.inner(), "a gamma takes a value outside the inner automorphisms");
  }
  c.require(g->second_center_members() == g->center_members(),
            "the second center exceeds the center");
  return verdict(c,
                 "2 records over a center of order 2; both gammas are inner and pass "
                 "the normal-case, compatibility, and commutator checks; the second "
                 "center equals the center");
}

// The square of a simple group is a plain direct product, but the factor
// swap makes the two copies a single invariant factor, so only the two
// translation subgroups are normalized: the invariant decomposition is
// strictly coarser than the plain one.
AcceptanceCase case_factor_swap_fusion() {
  Checker c;
  GroupPtr g = named_group("direct(alt:5,alt:5)");
  c.require(g->product_structure().has_value(), "the square does not carry its product structure");
  Holomorph hol = holomorph(g, AutStrategy::Factorwise);
  KrsDecomposition krs = krs_inn(g, hol.aut);
  c.require(krs.factors.size() == 1,
            "the invariant decomposition separated the two isomorphic factors");
  PerfectJEnumeration e = enumerate_j_perfect(hol);
  c.require(e.records.size() == 2, "expected exactly 2 normalized regular subgroups");
  return verdict(c,
                 "the factor swap fuses the two direct factors into one invariant "
                 "factor, so only the two translation subgroups appear");
}

std::vector<std::vector<Point>> group_key(const PermGroup& pg) {
  std::vector<std::vector<Point>> key;
  for (const Perm& p : pg.elements()) key.push_back(p.images());
  std::sort(key.begin(), key.end());
  return key;
}

// Two searches that share no machinery: backtracking over gamma tables
// versus breadth-first closure over the subgroup lattice of the holomorph.
// They must return the same regular subgroups element for element, and every
// subgroup the holomorph normalizes must satisfy both laws.
AcceptanceCase case_oracle_agreement() {
  Checker c;
  const char* specs[] = {"cyclic:4", "direct(cyclic:2,cyclic:2)",
                         "direct(direct(cyclic:2,cyclic:2),cyclic:2)",
                         "quaternion:8", "dihedral:8"};
  std::size_t regulars = 0, stable = 0;
  for (const char* spec : specs) {
    GroupPtr g = named_group(spec);
    Holomorph hol = holomorph(g);
    OracleEnumeration all = enumerate_regular_in_hol(hol);
    std::vector<PermGroup> indep = regular_subgroups_by_closure(hol);
    std::vector<std::vector<std::vector<Point>>> a, b;
    for (const OracleHit& h : all.hits) a.push_back(group_key(h.nu));
    for (const PermGroup& pg : indep) b.push_back(group_key(pg));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    c.require(a == b, std::string(spec) + ": the two searches disagree");
    regulars += all.hits.size();
    OracleEnumeration j = enumerate_j_bruteforce(hol);
    for (const OracleHit& h : j.hits) {
      c.require(validate_gamma_regular(h.gamma),
                std::string(spec) + ": a normalized subgroup fails the twisting law");
      c.require(validate_gamma_normal(h.gamma, hol.aut),
                std::string(spec) + ": a normalized subgroup fails the normal-case law");
    }
    stable += j.hits.size();
  }
  std::ostringstream s;
  s << "gamma backtracking and subgroup closure agree on all 5 groups ("
    << regulars << " regular subgroups in total); each of the " << stable
    << " conjugation-stable ones passes both laws";
  return verdict(c, s.str());
}

// For the double cover's two records, conjugation by the inversion
// permutation exchanges the two subgroups, inversion is an isomorphism
// between the two twisted operations, and each subgroup is the other's full
// centralizer in the symmetric group of degree 120.
AcceptanceCase case_complement_pairing() {
  Checker c;
  GroupPtr g = named_group("sl:2,5");
  Holomorph hol = holomorph(g);
  PerfectJEnumeration e = enumerate_j_perfect(hol);
  c.require(e.records.size() == 2, "expected exactly 2 records");
  PairingReport rep = pairing_check(hol, e);
  c.require(rep.inversion_conjugates, "inversion does not exchange the two subgroups");
  c.require(rep.inversion_is_circ_iso,
            "inversion is not an isomorphism of the twisted operations");
  c.require(rep.centralizer_checked, "the centralizer computation did not run");
  c.require(rep.centralizer_matches, "a subgroup's centralizer is not its partner");
  return verdict(c,
                 "at degree 120, inversion exchanges the two records and each is the "
                 "other's full centralizer in the symmetric group");
}

// One gamma map built from arbitrary automorphism values: valid exactly when
// its twisted table is associative.
bool law_matches_associativity(const GroupPtr& g, const std::vector<Perm>& values,
                               std::size_t& agreements, std::size_t& valid) {
  GammaMap gm = GammaMap::from_perm_values(g, values);
  bool law = validate_gamma_regular(gm);
  bool assoc = true;
  const std::size_t n = g->order();
  for (Elt x = 0; x < n && assoc; ++x)
    for (Elt y = 0; y < n && assoc; ++y)
      for (Elt z = 0; z < n && assoc; ++z)
        if (gm.circ(gm.circ(x, y), z) != gm.circ(x, gm.circ(y, z))) assoc = false;
  if (law != assoc) return false;
  ++agreements;
  if (law) ++valid;
  return true;
}

// Round trips: extracting the gamma of a twisted subgroup's own nu image
// returns the same gamma; rebuilding a group from its right translations
// reproduces the table; and the twisting law is equivalent to associativity
// of the twisted table, exhaustively on three small groups and on 10^4
// seeded random maps over four larger ones.
AcceptanceCase case_round_trips() {
  Checker c;
  std::size_t trips = 0;
  for (const char* spec :
       {"cyclic:4", "direct(cyclic:2,cyclic:2)", "quaternion:8", "dihedral:8"}) {
    GroupPtr g = named_group(spec);
    Holomorph hol = holomorph(g);
    for (const OracleHit& h : enumerate_regular_in_hol(hol).hits) {
      CircStructure cs = circ_structure(h.gamma);
      c.require(gamma_from_regular(cs.nu_image, g) == h.gamma,
                std::string(spec) + ": the gamma round trip is not the identity");
      ++trips;
    }
    c.require(same_multiplication(*g, *from_regular(hol.rho)),
              std::string(spec) + ": rebuilding from the right translations changed the table");
  }
  {
    GroupPtr g = named_group("sl:2,5");
    Holomorph hol = holomorph(g);
    for (const PerfectJRecord& r : enumerate_j_perfect(hol).records) {
      c.require(gamma_from_regular(r.record.circ.nu_image, g) == r.record.gamma,
                "sl:2,5: the gamma round trip is not the identity");
      ++trips;
    }
    c.require(same_multiplication(*g, *from_regular(hol.rho)),
              "sl:2,5: rebuilding from the right translations changed the table");
  }

  std::size_t agreements = 0, valid = 0;
  for (const char* spec : {"cyclic:4", "direct(cyclic:2,cyclic:2)", "sym:3"}) {
    GroupPtr g = named_group(spec);
    std::vector<Perm> pool = automorphism_group(g).perms.elements();
    const std::size_t n = g->order(), k = pool.size();
    std::vector<std::size_t> pick(n, 0);
    std::vector<Perm> values(n, Perm(n));
    bool done = false;
    while (!done && c.ok) {
      for (Elt x = 1; x < n; ++x) values[x] = pool[pick[x]];
      c.require(law_matches_associativity(g, values, agreements, valid),
                std::string(spec) + ": law/associativity equivalence failed");
      std::size_t pos = 1;
      while (pos < n && ++pick[pos] == k) pick[pos++] = 0;
      done = pos == n;
    }
    for (const Perm& a : pool) {
      if (a.is_identity()) continue;
      std::vector<Perm> constant(n, a);
      c.require(law_matches_associativity(g, constant, agreements, valid),
                std::string(spec) + ": equivalence failed on a constant map");
    }
  }

  std::mt19937 rng(2468);
  std::size_t samples = 0;
  for (const char* spec : {"quaternion:8", "dihedral:8", "dihedral:16", "alt:4"}) {
    GroupPtr g = named_group(spec);
    std::vector<Perm> pool = automorphism_group(g).perms.elements();
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    const std::size_t n = g->order();
    for (int s = 0; s < 2500 && c.ok; ++s) {
      std::vector<Perm> values;
      values.reserve(n);
      values.emplace_back(n);
      for (Elt x = 1; x < n; ++x) values.push_back(pool[d(rng)]);
      c.require(law_matches_associativity(g, values, agreements, valid),
                std::string(spec) + ": equivalence failed on a sampled map");
      ++samples;
    }
  }
  std::ostringstream s;
  s << trips << " gamma round trips are identities; tables rebuild from their "
    << "right translations; law/associativity equivalence holds on "
    << agreements << " maps (" << samples << " sampled, the rest exhaustive or "
    << "constant), " << valid << " of them valid";
  return verdict(c, s.str());
}

// Scope statement: the exotic prime-power families built around opposite
// replacement are not constructible from this catalog and are not reproduced
// here. The mechanism itself is exercised on catalog central products:
// replacing a nonabelian central factor by its opposite changes the table
// but factorwise inversion restores an isomorphism; exchanging the two
// isomorphic factors of the replaced double cover product composed with
// inversion is again an isomorphism onto the original; replacing an abelian
// factor never changes the table.
AcceptanceCase case_opposite_replacement_scope() {
  Checker c;
  GroupPtr g = named_group("central(sl:2,5,sl:2,5)");
  OppositeReplaceResult rep = opposite_replace(g, true);
  c.require(!rep.table_unchanged, "replacing a nonabelian factor left the table unchanged");
  c.require(rep.iso.has_value(),
            "factorwise inversion is not an isomorphism back to the original");
  auto orig = g->product_structure();
  auto repl = rep.group->product_structure();
  c.require(orig.has_value() && repl.has_value(), "a product structure is missing");
  if (orig && repl) {
    std::vector<Elt> gens, images;
    for (Elt a : repl->left->generating_set()) {
      gens.push_back(repl->left_embed[a]);
      images.push_back(orig->right_embed[a]);
    }
    for (Elt b : repl->right->generating_set()) {
      gens.push_back(repl->right_embed[b]);
      images.push_back(orig->left_embed[orig->left->inv(b)]);
    }
    c.require(extend_hom(*rep.group, *g, gens, images).has_value(),
              "exchanging the factors composed with inversion is not an isomorphism");
  }
  OppositeReplaceResult ab = opposite_replace(named_group("direct(alt:5,cyclic:3)"), true);
  c.require(ab.table_unchanged, "replacing an abelian factor changed the table");
  return verdict(c,
                 "exotic prime-power families are outside the builtin catalog and not "
                 "reproduced; on catalog products the mechanism passes, including the "
                 "factor exchange composed with inversion on the replaced double-cover "
                 "product");
}

struct Entry {
  const char* name;
  AcceptanceCase (*fn)();
};

constexpr Entry kEntries[] = {
    {"translation-duality", case_translation_duality},
    {"cyclic-four-chain", case_cyclic_four_chain},
    {"dihedral-quaternion-sixteen", case_dihedral_quaternion_sixteen},
    {"alternating-five", case_alternating_five},
    {"two-simple-factors", case_two_simple_factors},
    {"binary-icosahedral", case_binary_icosahedral},
    {"factor-swap-fusion", case_factor_swap_fusion},
    {"oracle-agreement", case_oracle_agreement},
    {"complement-pairing", case_complement_pairing},
    {"round-trips", case_round_trips},
    {"opposite-replacement-scope", case_opposite_replacement_scope},
};

}  // namespace

const std::vector<std::string>& acceptance_case_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kEntries) v.push_back(e.name);
    return v;
  }();
  return names;
}

std::vector<AcceptanceCase> run_acceptance(const std::optional<std::string>& only) {
  if (only) {
    bool known = false;
    for (const Entry& e : kEntries) known = known || *only == e.name;
    if (!known) throw ParseError("unknown acceptance case: " + *only);
  }
  std::vector<AcceptanceCase> out;
  for (const Entry& e : kEntries) {
    if (only && *only != e.name) continue;
    AcceptanceCase a;
    try {
      a = e.fn();
    } catch (const std::exception& ex) {
      a.pass = false;
      a.detail = ex.what();
    }
    a.name = e.name;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace holo
