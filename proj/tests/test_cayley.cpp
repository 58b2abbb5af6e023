#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "holo/catalog.hpp"
#include "holo/cayley.hpp"
#include "holo/errors.hpp"

using namespace holo;

namespace {

// Brute-force derived subgroup: closure of all elementwise commutators.
std::vector<Elt> derived_oracle(const CayleyGroup& g) {
  std::vector<Elt> seeds;
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b) seeds.push_back(g.comm(a, b));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  // commutator set is conjugation closed, so plain closure suffices
  std::set<Elt> members(seeds.begin(), seeds.end());
  members.insert(0);
  for (;;) {
    std::vector<Elt> fresh;
    for (Elt x : members)
      for (Elt s : seeds) {
        Elt p = g.mul(x, s);
        if (!members.count(p)) fresh.push_back(p);
      }
    if (fresh.empty()) break;
    members.insert(fresh.begin(), fresh.end());
  }
  return std::vector<Elt>(members.begin(), members.end());
}

}  // namespace

TEST_CASE("catalog orders and basic structure") {
  struct Row {
    const char* spec;
    std::size_t order, center, derived;
    bool perfect;
  };
  const Row rows[] = {
      {"cyclic:1", 1, 1, 1, true},  // trivial group is its own derived group
      {"cyclic:4", 4, 4, 1, false},
      {"cyclic:12", 12, 12, 1, false},
      {"dihedral:8", 8, 2, 2, false},
      {"dihedral:16", 16, 2, 4, false},
      {"quaternion:8", 8, 2, 2, false},
      {"quaternion:16", 16, 2, 4, false},
      {"sym:3", 6, 1, 3, false},
      {"sym:4", 24, 1, 12, false},
      {"sym:5", 120, 1, 60, false},
      {"alt:4", 12, 1, 4, false},
      {"alt:5", 60, 1, 60, true},
      {"alt:6", 360, 1, 360, true},
      {"sl:2,4", 60, 1, 60, true},
      {"sl:2,5", 120, 2, 120, true},
      {"sl:2,7", 336, 2, 336, true},
      {"sl:2,9", 720, 2, 720, true},
      {"psl:2,5", 60, 1, 60, true},
      {"psl:2,7", 168, 1, 168, true},
      {"psl:2,9", 360, 1, 360, true},
      {"psl:3,2", 168, 1, 168, true},
  };
  for (const Row& r : rows) {
    CAPTURE(r.spec);
    GroupPtr g = named_group(r.spec);
    CHECK(g->order() == r.order);
    CHECK(g->center_members().size() == r.center);
    CHECK(g->derived_members().size() == r.derived);
    CHECK(g->is_perfect() == r.perfect);
    CHECK(g->mul(0, 0) == 0);
    CHECK(g->inv(0) == 0);
  }
}

TEST_CASE("derived members match the exhaustive commutator oracle") {
  for (const char* spec : {"sym:4", "quaternion:8", "dihedral:16", "alt:5",
                           "sl:2,5", "cyclic:12"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    CHECK(g->derived_members() == derived_oracle(*g));
  }
}

TEST_CASE("element orders satisfy Lagrange and known profiles") {
  GroupPtr q8 = named_group("quaternion:8");
  int involutions = 0;
  for (Elt x = 0; x < q8->order(); ++x) {
    CHECK(q8->order() % q8->element_order(x) == 0);
    if (q8->element_order(x) == 2) ++involutions;
  }
  CHECK(involutions == 1);  // the quaternion group has a unique involution

  GroupPtr d16 = named_group("dihedral:16");
  involutions = 0;
  for (Elt x = 0; x < d16->order(); ++x)
    if (d16->element_order(x) == 2) ++involutions;
  CHECK(involutions == 9);  // eight reflections and the half turn

  CHECK(q8->element_order(0) == 1);
}

TEST_CASE("conjugacy classes") {
  GroupPtr a5 = named_group("alt:5");
  CHECK(a5->class_count() == 5);
  std::multiset<std::size_t> sizes;
  for (std::uint32_t c = 0; c < a5->class_count(); ++c)
    sizes.insert(a5->class_members(c).size());
  CHECK(sizes == std::multiset<std::size_t>{1, 12, 12, 15, 20});
  CHECK(a5->class_members(a5->class_of()[0]) == std::vector<Elt>{0});
}

TEST_CASE("generating sets generate") {
  for (const char* spec : {"cyclic:12", "sym:4", "alt:5", "sl:2,5",
                           "quaternion:16"}) {
    CAPTURE(spec);
    GroupPtr g = named_group(spec);
    Subgroup s = subgroup_closure(g, g->generating_set());
    CHECK(s.members.size() == g->order());
  }
}

TEST_CASE("second center") {
  GroupPtr sl = named_group("sl:2,5");
  CHECK(sl->second_center_members() == sl->center_members());
  GroupPtr d16 = named_group("dihedral:16");
  CHECK(d16->second_center_members().size() == 4);
}

TEST_CASE("translations are regular and interact correctly") {
  GroupPtr d8 = named_group("dihedral:8");
  PermGroup r = rho_rep(d8);
  PermGroup l = lambda_rep(d8);
  CHECK(r.is_regular());
  CHECK(l.is_regular());
  CHECK(r.centralizes(l));

  // rho(x) composed with rho(y) is rho(xy); lambda reverses the order.
  for (Elt x = 0; x < d8->order(); ++x)
    for (Elt y = 0; y < d8->order(); ++y) {
      CHECK(rho_perm(*d8, x).then(rho_perm(*d8, y)) ==
            rho_perm(*d8, d8->mul(x, y)));
      CHECK(lambda_perm(*d8, x).then(lambda_perm(*d8, y)) ==
            lambda_perm(*d8, d8->mul(y, x)));
    }

  // Conjugating the right translations by inversion gives the left ones.
  Perm inv = inversion_perm(*d8);
  CHECK(inv[0] == 0);
  CHECK(inv.then(inv).is_identity());
  for (Elt x = 0; x < d8->order(); ++x)
    CHECK(rho_perm(*d8, x).conjugated_by(inv) ==
          lambda_perm(*d8, d8->inv(x)));
  CHECK(r.conjugated_by(inv).same_group_as(l));

  // In an abelian group the two translation actions coincide.
  GroupPtr c6 = named_group("cyclic:6");
  for (Elt x = 0; x < 6; ++x)
    CHECK(rho_perm(*c6, x) == lambda_perm(*c6, x));
}

TEST_CASE("from_regular round trips") {
  GroupPtr c4 = named_group("cyclic:4");
  GroupPtr back = from_regular(rho_rep(c4));
  CHECK(same_multiplication(*c4, *back));

  GroupPtr d8 = named_group("dihedral:8");
  GroupPtr d8b = from_regular(rho_rep(d8));
  CHECK(same_multiplication(*d8, *d8b));

  CHECK_THROWS_AS(from_regular(PermGroup::symmetric(4)), Error);
}

TEST_CASE("opposite groups") {
  GroupPtr s4 = named_group("sym:4");
  GroupPtr op = opposite(s4);
  CHECK(op->order() == 24);
  for (Elt x = 0; x < 24; ++x)
    for (Elt y = 0; y < 24; ++y) CHECK(op->mul(x, y) == s4->mul(y, x));
  CHECK(opposite(op).get() == s4.get());

  // Inversion is an isomorphism onto the opposite group.
  for (Elt x = 0; x < 24; ++x)
    for (Elt y = 0; y < 24; ++y)
      CHECK(op->mul(s4->inv(x), s4->inv(y)) == s4->inv(s4->mul(x, y)));

  GroupPtr c6 = named_group("cyclic:6");
  CHECK(same_multiplication(*opposite(c6), *c6));
}

TEST_CASE("direct products") {
  auto res = direct_product(named_group("cyclic:2"), named_group("cyclic:2"));
  CHECK(res.group->order() == 4);
  CHECK(res.group->is_abelian());
  for (Elt x = 0; x < 4; ++x) CHECK(res.group->mul(x, x) == 0);

  // Embeddings are homomorphisms with commuting images.
  GroupPtr a = named_group("sym:3");
  GroupPtr b = named_group("cyclic:4");
  auto p = direct_product(a, b);
  CHECK(p.group->order() == 24);
  for (Elt x = 0; x < a->order(); ++x)
    for (Elt y = 0; y < a->order(); ++y)
      CHECK(p.group->mul(p.left_embed[x], p.left_embed[y]) ==
            p.left_embed[a->mul(x, y)]);
  for (Elt x = 0; x < b->order(); ++x)
    for (Elt y = 0; y < b->order(); ++y)
      CHECK(p.group->mul(p.right_embed[x], p.right_embed[y]) ==
            p.right_embed[b->mul(x, y)]);
  for (Elt x = 0; x < a->order(); ++x)
    for (Elt y = 0; y < b->order(); ++y)
      CHECK(p.group->mul(p.left_embed[x], p.right_embed[y]) ==
            p.group->mul(p.right_embed[y], p.left_embed[x]));

  GroupPtr big = named_group("direct(alt:5,psl:2,7)");
  CHECK(big->order() == 10080);
  CHECK(big->is_perfect());
  CHECK(big->center_members().size() == 1);

  GroupPtr same = named_group("direct(sym:4,cyclic:1)");
  CHECK(same_multiplication(*same, *named_group("sym:4")));
}

TEST_CASE("central products") {
  GroupPtr q8q8 = named_group("central(quaternion:8,quaternion:8)");
  CHECK(q8q8->order() == 32);
  CHECK(q8q8->center_members().size() == 2);
  CHECK(q8q8->derived_members().size() == 2);

  // Explicit amalgam matches the default one here.
  GroupPtr expl = named_group("central(quaternion:8,quaternion:8;2=2)");
  CHECK(same_multiplication(*q8q8, *expl));

  GroupPtr slsl = named_group("central(sl:2,5,sl:2,5)");
  CHECK(slsl->order() == 7200);
  CHECK(slsl->is_perfect());
  CHECK(slsl->center_members().size() == 2);

  // Amalgam members really are identified across the embeddings.
  auto s = slsl->product_structure();
  REQUIRE(s.has_value());
  for (auto [l, r] : s->amalgam_pairs)
    CHECK(s->left_embed[l] == s->right_embed[r]);
  CHECK(s->amalgam_pairs.size() == 2);

  GroupPtr c4c2 = named_group("central(cyclic:4,cyclic:2)");
  CHECK(c4c2->order() == 4);
  CHECK(!c4c2->is_abelian() == false);

  // Ambiguous default amalgam is rejected.
  CHECK_THROWS_AS(named_group("central(direct(cyclic:2,cyclic:2),cyclic:2)"),
                  ParseError);
}

TEST_CASE("central quotients") {
  GroupPtr sl = named_group("sl:2,5");
  auto q = quotient_central(sl, sl->center_members());
  CHECK(q.group->order() == 60);
  CHECK(q.group->is_perfect());
  CHECK(q.group->class_count() == 5);
  for (Elt x = 0; x < sl->order(); ++x)
    for (Elt y = 0; y < sl->order(); ++y)
      CHECK(q.projection[sl->mul(x, y)] ==
            q.group->mul(q.projection[x], q.projection[y]));
  std::vector<Elt> kernel;
  for (Elt x = 0; x < sl->order(); ++x)
    if (q.projection[x] == 0) kernel.push_back(x);
  CHECK(kernel == sl->center_members());

  GroupPtr q8 = named_group("quaternion:8");
  auto v = quotient_central(q8, q8->center_members());
  CHECK(v.group->order() == 4);
  for (Elt x = 0; x < 4; ++x) CHECK(v.group->mul(x, x) == 0);

  auto idq = quotient_central(q8, {0});
  CHECK(same_multiplication(*idq.group, *q8));

  CHECK_THROWS_AS(quotient_central(named_group("sym:3"), {0, 1}), ParseError);
}

TEST_CASE("subgroup extraction") {
  GroupPtr s4 = named_group("sym:4");
  Subgroup d = derived_subgroup_of(s4);
  auto ex = subgroup_as_group(d);
  CHECK(ex.group->order() == 12);
  CHECK(ex.group->class_count() == 4);
  for (std::size_t i = 0; i < d.members.size(); ++i)
    for (std::size_t j = 0; j < d.members.size(); ++j) {
      Elt p = s4->mul(d.members[i], d.members[j]);
      CHECK(d.members[ex.group->mul(static_cast<Elt>(i), static_cast<Elt>(j))] == p);
    }
}

TEST_CASE("table validation catches bad input") {
  // A 2x2 table with a wrong identity.
  CHECK_THROWS_AS(make_table_group({1, 0, 0, 1}, 2, "bad"), ParseError);
  // Non-associative Latin square (order 5 loop).
  std::vector<std::uint16_t> loop = {
      0, 1, 2, 3, 4,
      1, 0, 3, 4, 2,
      2, 4, 0, 1, 3,
      3, 2, 4, 0, 1,
      4, 3, 1, 2, 0,
  };
  CHECK_THROWS_AS(make_table_group(std::move(loop), 5, "bad"), ParseError);
}

TEST_CASE("group spec grammar errors") {
  CHECK_THROWS_AS(named_group("foo:3"), ParseError);
  CHECK_THROWS_AS(named_group("cyclic:0"), ParseError);
  CHECK_THROWS_AS(named_group("direct(cyclic:2"), ParseError);
  CHECK_THROWS_AS(named_group("sl:3,5"), ParseError);
  CHECK_THROWS_AS(named_group("cyclic:4 junk"), ParseError);
  CHECK_THROWS_AS(named_group("quaternion:12"), ParseError);
  CHECK(named_group("direct(direct(cyclic:2,cyclic:2),cyclic:3)")->order() == 12);
  CHECK(named_group(" direct( sl:2,5 , sl:2,7 ) ")->order() == 40320);
  CHECK(named_group("opposite(sym:4)")->order() == 24);
}
