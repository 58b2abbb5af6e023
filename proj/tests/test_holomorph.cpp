#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holo/catalog.hpp"
#include "holo/errors.hpp"
#include "holo/holomorph.hpp"

using namespace holo;

TEST_CASE("holomorph orders") {
  struct Row {
    const char* spec;
    std::size_t hol_order;
  };
  const Row rows[] = {
      {"cyclic:4", 8},     {"cyclic:5", 20},
      {"cyclic:6", 12},    {"direct(cyclic:2,cyclic:2)", 24},
      {"dihedral:8", 64},  {"quaternion:8", 192},
      {"cyclic:8", 32},    {"sym:3", 36},
      {"sym:4", 576},      {"alt:4", 288},
      {"dihedral:16", 512}, {"quaternion:16", 512},
      {"alt:5", 7200},     {"sl:2,5", 14400},
  };
  for (const Row& r : rows) {
    CAPTURE(r.spec);
    Holomorph h = holomorph(named_group(r.spec));
    CHECK(h.group.order() == r.hol_order);
    CHECK(h.group.degree() == h.base->order());
    CHECK(h.rho.is_subgroup_of(h.group));
    CHECK(h.aut.perms.is_subgroup_of(h.group));
  }
}

TEST_CASE("holomorph equals the literal normalizer of rho at small degree") {
  for (const char* spec :
       {"cyclic:4", "cyclic:5", "cyclic:6", "sym:3",
        "direct(cyclic:2,cyclic:2)", "dihedral:8", "quaternion:8", "cyclic:8",
        "direct(direct(cyclic:2,cyclic:2),cyclic:2)"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    Holomorph h = holomorph(g);
    PermGroup sym = PermGroup::symmetric(g->order());
    PermGroup oracle = normalizer_in(sym, h.rho);
    CHECK(oracle.order() == h.group.order());
    CHECK(oracle.same_group_as(h.group));
  }
}

TEST_CASE("translation centralizer duality") {
  for (const char* spec : {"dihedral:8", "quaternion:8", "sym:4", "alt:5"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    PermGroup rho = rho_rep(g);
    PermGroup lam = lambda_rep(g);
    CHECK(centralizer_in_sym(rho).same_group_as(lam));
    CHECK(centralizer_in_sym(lam).same_group_as(rho));
  }
}

TEST_CASE("the stabilizer of the identity in Hol is Aut") {
  for (const char* spec : {"cyclic:4", "dihedral:8", "quaternion:8"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    Holomorph h = holomorph(g);
    std::size_t fixing = 0;
    for (const Perm& p : h.group.elements()) {
      if (p[0] != 0) continue;
      ++fixing;
      CHECK(is_automorphism(*g, p));
      CHECK(h.aut.perms.contains(p));
    }
    CHECK(fixing == h.aut.order());
  }
}

TEST_CASE("classification of the rho record") {
  GroupPtr s4 = named_group("sym:4");
  Holomorph h = holomorph(s4);
  RegularRecord rec = classify_regular(h, GammaMap::trivial_style(s4));
  CHECK(rec.in_j);
  CHECK(rec.in_i == true);
  CHECK(rec.in_h == true);
  REQUIRE(rec.iso.has_value());
  CHECK(rec.iso->is_identity());
  CHECK(rec.aut_circ_strategy == "same_table");
}

TEST_CASE("classification of the lambda record") {
  for (const char* spec : {"sym:4", "quaternion:8", "alt:5"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    Holomorph h = holomorph(g);
    RegularRecord rec = classify_regular(h, GammaMap::lambda_style(g));
    CHECK(rec.in_j);
    CHECK(rec.in_i == true);
    CHECK(rec.in_h == true);
    REQUIRE(rec.iso.has_value());
    CHECK(*rec.iso == inversion_perm(*g));
    CHECK(rec.aut_circ_strategy == "opposite_table");
    CHECK(rec.circ.nu_image.same_group_as(lambda_rep(g)));
  }
}

TEST_CASE("the Klein twist of the four-cycle lies in J but not I") {
  GroupPtr c4 = named_group("cyclic:4");
  Holomorph h = holomorph(c4);
  CHECK(h.group.order() == 8);
  Perm invp(std::vector<Point>{0, 3, 2, 1});
  std::vector<Perm> vals = {Perm(4), invp, Perm(4), invp};
  GammaMap gm = GammaMap::from_perm_values(c4, vals);
  RegularRecord rec = classify_regular(h, gm);
  CHECK(rec.in_j);
  CHECK(rec.in_i == false);
  CHECK(rec.in_h == false);
  CHECK(!rec.iso.has_value());
  // The Klein copy is normalized by all of S4, strictly above Hol(C4).
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup normalizer = normalizer_in(s4, rec.circ.nu_image);
  CHECK(normalizer.order() == 24);
  CHECK(h.group.order() < normalizer.order());
}

TEST_CASE("t group of the rho and lambda records") {
  GroupPtr s4 = named_group("sym:4");
  Holomorph h = holomorph(s4);
  std::vector<RegularRecord> records;
  records.push_back(classify_regular(h, GammaMap::trivial_style(s4)));
  records.push_back(classify_regular(h, GammaMap::lambda_style(s4)));
  TGroupResult t = t_group(h, records);
  CHECK(t.structure == "C2");
  CHECK(t.table == std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}});

  // Abelian base: lambda is rho and H collapses.
  GroupPtr c6 = named_group("cyclic:6");
  Holomorph hc = holomorph(c6);
  std::vector<RegularRecord> single;
  single.push_back(classify_regular(hc, GammaMap::trivial_style(c6)));
  TGroupResult t1 = t_group(hc, single);
  CHECK(t1.structure == "C1");
}

TEST_CASE("a wrong conjugator hint is rejected") {
  GroupPtr s4 = named_group("sym:4");
  Holomorph h = holomorph(s4);
  CHECK_THROWS_AS(classify_regular(h, GammaMap::trivial_style(s4),
                                   inversion_perm(*s4)),
                  InvariantError);
}
