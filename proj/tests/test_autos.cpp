#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "holo/autos.hpp"
#include "holo/catalog.hpp"
#include "holo/cayley.hpp"
#include "holo/errors.hpp"

using namespace holo;

TEST_CASE("automorphism group orders for standard groups") {
  struct Row {
    const char* spec;
    std::size_t aut_order;
  };
  const Row rows[] = {
      {"cyclic:1", 1},
      {"cyclic:2", 1},
      {"cyclic:3", 2},
      {"cyclic:4", 2},
      {"cyclic:5", 4},
      {"cyclic:6", 2},
      {"cyclic:8", 4},
      {"cyclic:12", 4},
      {"direct(cyclic:2,cyclic:2)", 6},
      {"direct(direct(cyclic:2,cyclic:2),cyclic:2)", 168},
      {"sym:3", 6},
      {"sym:4", 24},
      {"alt:4", 24},
      {"dihedral:8", 8},
      {"dihedral:16", 32},
      {"quaternion:8", 24},
      {"quaternion:16", 32},
      {"alt:5", 120},
      {"sym:5", 120},
      {"sl:2,5", 120},
      {"psl:2,7", 336},
      {"psl:3,2", 336},
      {"alt:6", 1440},
  };
  for (const Row& r : rows) {
    CAPTURE(r.spec);
    AutGroup aut = automorphism_group(named_group(r.spec));
    CHECK(aut.order() == r.aut_order);
    CHECK(aut.strategy == "brute");
  }
}

TEST_CASE("brute automorphisms really are automorphisms") {
  for (const char* spec : {"quaternion:8", "sym:4", "dihedral:16"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    AutGroup aut = automorphism_group(g);
    for (const Perm& p : aut.perms.generators()) CHECK(is_automorphism(*g, p));
  }
}

TEST_CASE("inner automorphisms") {
  GroupPtr s4 = named_group("sym:4");
  PermGroup inn = inner_automorphisms(s4);
  CHECK(inn.order() == 24);
  AutGroup aut = automorphism_group(s4);
  for (const Perm& p : inn.generators()) CHECK(aut.perms.contains(p));

  GroupPtr q8 = named_group("quaternion:8");
  CHECK(inner_automorphisms(q8).order() == 4);
  CHECK(automorphism_group(q8).order() == 24);

  GroupPtr a5 = named_group("alt:5");
  CHECK(inner_automorphisms(a5).order() == 60);
  CHECK(automorphism_group(a5).order() == 120);

  // Conjugation maps compose covariantly: iota(a) then iota(b) is iota(ab).
  GroupPtr d8 = named_group("dihedral:8");
  for (Elt a = 0; a < d8->order(); ++a)
    for (Elt b = 0; b < d8->order(); ++b)
      CHECK(iota_perm(*d8, a).then(iota_perm(*d8, b)) ==
            iota_perm(*d8, d8->mul(a, b)));
}

TEST_CASE("central automorphisms") {
  GroupPtr q8 = named_group("quaternion:8");
  // Class 2 group: every inner automorphism acts trivially mod center.
  for (Elt y = 0; y < q8->order(); ++y)
    CHECK(is_central_automorphism(*q8, iota_perm(*q8, y)));

  GroupPtr s4 = named_group("sym:4");
  CHECK(is_central_automorphism(*s4, Perm(24)));
  bool all_central = true;
  for (Elt y = 1; y < s4->order(); ++y)
    all_central = all_central && is_central_automorphism(*s4, iota_perm(*s4, y));
  CHECK(!all_central);
}

TEST_CASE("characteristic subgroups") {
  GroupPtr d16 = named_group("dihedral:16");
  AutGroup aut = automorphism_group(d16);
  CHECK(is_characteristic(aut, d16->center_members()));
  CHECK(is_characteristic(aut, d16->derived_members()));

  // A single reflection  does not span a characteristic subgroup.
  GroupPtr d8 = named_group("dihedral:8");
  AutGroup aut8 = automorphism_group(d8);
  CHECK(!is_characteristic(aut8, {0, 4}));

  GroupPtr q8 = named_group("quaternion:8");
  AutGroup autq = automorphism_group(q8);
  CHECK(!is_characteristic(autq, {0, 1, 2, 3}));
  CHECK(is_characteristic(autq, q8->center_members()));
}

TEST_CASE("quasisimple detection") {
  CHECK(is_quasisimple(named_group("alt:5")));
  CHECK(is_quasisimple(named_group("sl:2,5")));
  CHECK(is_quasisimple(named_group("psl:2,7")));
  CHECK(is_quasisimple(named_group("alt:6")));
  CHECK(!is_quasisimple(named_group("quaternion:8")));
  CHECK(!is_quasisimple(named_group("sym:4")));
  CHECK(!is_quasisimple(named_group("cyclic:1")));
  CHECK(!is_quasisimple(named_group("cyclic:5")));
}

TEST_CASE("factorwise automorphism groups") {
  GroupPtr g = named_group("direct(alt:5,psl:2,7)");
  AutGroup aut = automorphism_group(g);
  CHECK(aut.order() == 120 * 336);
  CHECK(aut.strategy == "factorwise");
  // Spot check two generators elementwise.
  const auto& gens = aut.perms.generators();
  REQUIRE(gens.size() >= 2);
  CHECK(is_automorphism(*g, gens.front()));
  CHECK(is_automorphism(*g, gens.back()));

  GroupPtr slsl = named_group("central(sl:2,5,sl:2,5)");
  AutGroup aut2 = automorphism_group(slsl);
  CHECK(aut2.order() == 120 * 120 * 2);
  CHECK(aut2.strategy == "factorwise_swap");
  CHECK(is_automorphism(*slsl, aut2.perms.generators().back()));

  GroupPtr a5a5 = named_group("direct(alt:5,alt:5)");
  AutGroup aut3 = automorphism_group(a5a5);
  CHECK(aut3.order() == 120 * 120 * 2);
  CHECK(aut3.strategy == "factorwise_swap");

  // The swap generator exchanges the embedded factors.
  auto s = a5a5->product_structure();
  REQUIRE(s.has_value());
  const Perm& sigma = aut3.perms.generators().back();
  std::vector<char> in_right(a5a5->order(), 0);
  for (Elt y = 0; y < s->right->order(); ++y) in_right[s->right_embed[y]] = 1;
  for (Elt x = 0; x < s->left->order(); ++x)
    CHECK(in_right[sigma[s->left_embed[x]]]);
}

TEST_CASE("automorphism scope errors") {
  CHECK_THROWS_AS(
      automorphism_group(named_group("alt:5"), AutStrategy::Factorwise),
      ScopeError);
  CHECK_THROWS_AS(automorphism_group(named_group("direct(sym:4,sym:4)"),
                                     AutStrategy::Factorwise),
                  ScopeError);
  AutBudget tight;
  tight.max_brute_order = 16;
  CHECK_THROWS_AS(automorphism_group(named_group("sym:4"), AutStrategy::Brute,
                                     tight),
                  BoundError);
}

TEST_CASE("extend_hom builds verified isomorphisms") {
  GroupPtr c6 = named_group("cyclic:6");
  // x -> 5x is the inversion automorphism of a cyclic group.
  auto inv6 = extend_hom(*c6, *c6, {1}, {5});
  REQUIRE(inv6.has_value());
  CHECK(is_automorphism(*c6, *inv6));
  // x -> 2x is not injective on C6.
  CHECK(!extend_hom(*c6, *c6, {1}, {2}).has_value());
  // A quaternion relation breaks in the dihedral group of the same order.
  GroupPtr q8 = named_group("quaternion:8");
  GroupPtr d8 = named_group("dihedral:8");
  CHECK(!extend_hom(*q8, *d8, q8->generating_set(), d8->generating_set())
             .has_value());
}

TEST_CASE("isomorphism search finds known isomorphisms") {
  struct Pair {
    const char* a;
    const char* b;
    bool iso;
  };
  const Pair pairs[] = {
      {"alt:5", "psl:2,5", true},
      {"alt:5", "sl:2,4", true},
      {"psl:2,7", "psl:3,2", true},
      {"alt:6", "psl:2,9", true},
      {"sym:3", "cyclic:6", false},
      {"dihedral:16", "quaternion:16", false},
      {"dihedral:8", "quaternion:8", false},
      {"cyclic:4", "direct(cyclic:2,cyclic:2)", false},
      {"sym:4", "alt:4", false},
  };
  for (const Pair& p : pairs) {
    CAPTURE(p.a);
    CAPTURE(p.b);
    GroupPtr a = named_group(p.a);
    GroupPtr b = named_group(p.b);
    auto w = isomorphism_search(*a, *b);
    CHECK(w.has_value() == p.iso);
    if (w) {
      CHECK((*w)[0] == 0);
      bool hom = true;
      for (Elt x = 0; x < a->order() && hom; ++x)
        for (Elt y = 0; y < a->order() && hom; ++y)
          hom = (*w)[a->mul(x, y)] == b->mul((*w)[x], (*w)[y]);
      CHECK(hom);
      // Deterministic witness.
      CHECK(*isomorphism_search(*a, *b) == *w);
    }
  }
}
