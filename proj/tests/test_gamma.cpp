#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "holo/autos.hpp"
#include "holo/catalog.hpp"
#include "holo/cayley.hpp"
#include "holo/errors.hpp"
#include "holo/gamma.hpp"

using namespace holo;

TEST_CASE("trivial gamma encodes rho") {
  for (const char* spec : {"cyclic:4", "sym:4", "quaternion:8"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    GammaMap gm = GammaMap::trivial_style(g);
    CHECK(validate_gamma_regular(gm));
    CHECK(gm.value_count() == 1);
    for (Elt x = 0; x < g->order(); ++x)
      for (Elt y = 0; y < g->order(); ++y)
        CHECK(gm.circ(x, y) == g->mul(x, y));
    CircStructure cs = circ_structure(gm);
    CHECK(same_multiplication(*cs.circ, *g));
    CHECK(cs.nu_image.same_group_as(rho_rep(g)));
  }
}

TEST_CASE("lambda gamma encodes the opposite group") {
  for (const char* spec : {"sym:4", "quaternion:8", "sl:2,5"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    GammaMap gm = GammaMap::lambda_style(g);
    CHECK(validate_gamma_regular(gm));
    // Distinct values iota(y^{-1}) are indexed by center cosets.
    CHECK(gm.value_count() == g->order() / g->center_members().size());
    CircStructure cs = circ_structure(gm);
    CHECK(same_multiplication(*cs.circ, *opposite(g)));
    CHECK(cs.nu_image.same_group_as(lambda_rep(g)));
    for (Elt h = 0; h < g->order(); ++h)
      CHECK(nu_perm(gm, h) == lambda_perm(*g, h));
  }
}

TEST_CASE("lambda gamma passes the normal-case criterion") {
  for (const char* spec : {"sym:4", "quaternion:8", "sl:2,5"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    AutGroup aut = automorphism_group(g);
    GammaMap gm = GammaMap::lambda_style(g);
    CHECK(validate_gamma_normal(gm, aut));
    CHECK(commutator_identity_check(gm, aut).all());
    CHECK(skew_brace_check(gm));
  }
}

TEST_CASE("an invalid gamma map fails validation") {
  GroupPtr c4 = named_group("cyclic:4");
  // Send a single element to the inversion automorphism: breaks the law.
  std::vector<Perm> vals(4, Perm(4));
  vals[1] = Perm(std::vector<Point>{0, 3, 2, 1});
  GammaMap gm = GammaMap::from_perm_values(c4, vals);
  CHECK(!validate_gamma_regular(gm));
  CHECK_THROWS_AS(circ_structure(gm), ParseError);

  // Values that are not even homomorphisms.
  std::vector<Perm> bad(4, Perm(4));
  bad[1] = Perm(std::vector<Point>{0, 2, 1, 3});
  GammaMap gm2 = GammaMap::from_perm_values(c4, bad);
  CHECK(!validate_gamma_regular(gm2));
}

TEST_CASE("gamma value storage") {
  // Nonabelian: lambda values are inner.
  GammaMap lam = GammaMap::lambda_style(named_group("sym:3"));
  CHECK(lam.inner());

  // The quaternion twist by an outer automorphism needs the pool. Build a
  // valid map on C4: gamma(x) = inversion for odd x.
  GroupPtr c4 = named_group("cyclic:4");
  Perm invp(std::vector<Point>{0, 3, 2, 1});
  std::vector<Perm> vals = {Perm(4), invp, Perm(4), invp};
  GammaMap gm = GammaMap::from_perm_values(c4, vals);
  CHECK(!gm.inner());
  CHECK(gm.value_count() == 2);
  CHECK(validate_gamma_regular(gm));
  // x circ y = x^{gamma(y)} y twists C4 into the Klein group here.
  CircStructure cs = circ_structure(gm);
  CHECK(cs.circ->is_abelian());
  for (Elt x = 0; x < 4; ++x) CHECK(cs.circ->mul(x, x) == 0);
}

TEST_CASE("gamma round trips through the regular subgroup") {
  for (const char* spec : {"cyclic:4", "dihedral:8", "sym:4", "sl:2,5"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    for (bool lambda_side : {false, true}) {
      GammaMap gm = lambda_side ? GammaMap::lambda_style(g)
                                : GammaMap::trivial_style(g);
      CircStructure cs = circ_structure(gm);
      GammaMap back = gamma_from_regular(cs.nu_image, g);
      CHECK(back == gm);
      CHECK(back.hash() == gm.hash());
    }
  }
}

TEST_CASE("gamma from rho is trivial") {
  GroupPtr d8 = named_group("dihedral:8");
  GammaMap gm = gamma_from_regular(rho_rep(d8), d8);
  CHECK(gm == GammaMap::trivial_style(d8));
  GammaMap lm = gamma_from_regular(lambda_rep(d8), d8);
  CHECK(lm == GammaMap::lambda_style(d8));
}

TEST_CASE("twisted group inverses and associativity") {
  GroupPtr q8 = named_group("quaternion:8");
  CircStructure cs = circ_structure(GammaMap::lambda_style(q8));
  for (Elt x = 0; x < 8; ++x) {
    CHECK(cs.circ->mul(x, cs.circ->inv(x)) == 0);
    CHECK(cs.circ->mul(cs.circ->inv(x), x) == 0);
  }
  for (Elt a = 0; a < 8; ++a)
    for (Elt b = 0; b < 8; ++b)
      for (Elt c = 0; c < 8; ++c)
        CHECK(cs.circ->mul(cs.circ->mul(a, b), c) ==
              cs.circ->mul(a, cs.circ->mul(b, c)));
}

TEST_CASE("nu image sits inside the holomorph frame") {
  // nu(h) = gamma(h) rho(h) fixes nothing but factors through the point
  // stabilizer structure: nu(h) maps 0 to h.
  GroupPtr s4 = named_group("sym:4");
  GammaMap gm = GammaMap::lambda_style(s4);
  for (Elt h = 0; h < s4->order(); ++h) {
    Perm nu = nu_perm(gm, h);
    CHECK(nu[0] == h);
    CHECK(nu == gm.value_perm(gm.value_id(h)).then(rho_perm(*s4, h)));
  }
}

TEST_CASE("encodings distinguish gamma maps") {
  GroupPtr s4 = named_group("sym:4");
  GammaMap a = GammaMap::trivial_style(s4);
  GammaMap b = GammaMap::lambda_style(s4);
  CHECK(!(a == b));
  CHECK(a.encoding() < b.encoding());
  GroupPtr c4 = named_group("cyclic:4");
  // On an abelian group rho and lambda coincide.
  CHECK(GammaMap::trivial_style(c4) == GammaMap::lambda_style(c4));
}
