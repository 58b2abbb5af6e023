#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "holo/errors.hpp"
#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

using holo::Perm;
using holo::PermGroup;
using holo::Point;

namespace {

// Independent oracle: plain closure of a generating set by repeated
// multiplication, no stabilizer chain involved.
std::set<Perm> closure_oracle(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> elems;
  elems.insert(Perm(degree));
  for (;;) {
    std::vector<Perm> fresh;
    for (const Perm& e : elems)
      for (const Perm& g : gens) {
        Perm p = e.then(g);
        if (!elems.count(p)) fresh.push_back(std::move(p));
      }
    if (fresh.empty()) break;
    for (Perm& p : fresh) elems.insert(std::move(p));
  }
  return elems;
}

std::vector<Perm> all_perms(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::vector<Perm> out;
  do {
    out.emplace_back(std::vector<Point>(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::set<Perm> element_set(const PermGroup& g) {
  auto v = g.elements(1u << 20);
  return std::set<Perm>(v.begin(), v.end());
}

PermGroup make(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> v;
  for (const char* s : gens) v.push_back(Perm::parse(s, degree));
  return PermGroup(degree, std::move(v));
}

}  // namespace

TEST_CASE("chain order agrees with closure oracle on fixed families") {
  struct Case {
    std::size_t degree;
    std::vector<const char*> gens;
    std::uint64_t order;  // frozen from the closure oracle
  };
  const Case cases[] = {
      {4, {"(0 1 2 3)"}, 4},
      {4, {"(0 1)", "(0 1 2 3)"}, 24},
      {4, {"(0 1)(2 3)", "(0 2)(1 3)"}, 4},
      {4, {"(0 1 2 3)", "(0 2)"}, 8},
      {5, {"(0 1 2)", "(2 3 4)"}, 60},
      {6, {"(0 1 2 3 4 5)", "(0 1)"}, 720},
      {7, {"(0 1 2)", "(0 1 2 3 4 5 6)"}, 2520},
  };
  for (const auto& c : cases) {
    std::vector<Perm> gens;
    for (const char* s : c.gens) gens.push_back(Perm::parse(s, c.degree));
    auto oracle = closure_oracle(gens, c.degree);
    PermGroup g(c.degree, gens);
    CHECK(g.order() == c.order);
    CHECK(g.order() == oracle.size());
    for (const Perm& p : oracle) CHECK(g.contains(p));
    CHECK(element_set(g) == oracle);
  }
}

TEST_CASE("chain order agrees with closure oracle on random subgroups of S6") {
  std::mt19937 rng(777);
  auto s6 = all_perms(6);
  std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Perm> gens = {s6[pick(rng)], s6[pick(rng)]};
    auto oracle = closure_oracle(gens, 6);
    PermGroup g(6, gens);
    CHECK(g.order() == oracle.size());
    CHECK(element_set(g) == oracle);
  }
}

TEST_CASE("membership") {
  PermGroup s4 = make(4, {"(0 1)", "(0 1 2 3)"});
  CHECK(s4.contains(Perm::parse("(0 3)", 4)));
  PermGroup a4 = make(4, {"(0 1 2)", "(1 2 3)"});
  CHECK(a4.order() == 12);
  CHECK(!a4.contains(Perm::parse("(0 1)", 4)));
  CHECK(a4.contains(Perm::parse("(0 1)(2 3)", 4)));
}

TEST_CASE("orbits, transitivity, regularity") {
  PermGroup g = make(4, {"(0 1)(2 3)"});
  auto o = g.orbit(0);
  CHECK(o == std::vector<Point>{0, 1});

  PermGroup c4 = make(4, {"(0 1 2 3)"});
  CHECK(c4.is_transitive());
  CHECK(c4.is_regular());

  PermGroup s4 = make(4, {"(0 1)", "(0 1 2 3)"});
  CHECK(s4.is_transitive());
  CHECK(!s4.is_regular());

  PermGroup v4 = make(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  CHECK(v4.is_regular());
  CHECK(v4.regular_element_mapping_zero_to(2) == Perm::parse("(0 2)(1 3)", 4));
  CHECK(v4.regular_element_mapping_zero_to(0).is_identity());

  PermGroup trivial(1);
  CHECK(trivial.is_regular());
  CHECK(trivial.order() == 1);
}

TEST_CASE("derived subgroup against exhaustive commutator oracle") {
  auto derived_oracle = [](const PermGroup& g) {
    auto elems = g.elements();
    std::vector<Perm> comms;
    for (const Perm& a : elems)
      for (const Perm& b : elems)
        comms.push_back(a.inverse().then(b.inverse()).then(a).then(b));
    return closure_oracle(comms, g.degree());
  };

  PermGroup s4 = make(4, {"(0 1)", "(0 1 2 3)"});
  PermGroup d1 = derived_subgroup(s4);
  CHECK(d1.order() == 12);
  CHECK(element_set(d1) == derived_oracle(s4));

  PermGroup a5 = make(5, {"(0 1 2)", "(2 3 4)"});
  CHECK(derived_subgroup(a5).order() == 60);

  PermGroup v4 = make(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  CHECK(derived_subgroup(v4).is_trivial());

  PermGroup d8 = make(4, {"(0 1 2 3)", "(0 2)"});
  PermGroup d2 = derived_subgroup(d8);
  CHECK(d2.order() == 2);
  CHECK(element_set(d2) == derived_oracle(d8));
}

TEST_CASE("center") {
  PermGroup s4 = make(4, {"(0 1)", "(0 1 2 3)"});
  CHECK(center_of(s4).is_trivial());

  PermGroup d8 = make(4, {"(0 1 2 3)", "(0 2)"});
  PermGroup z = center_of(d8);
  CHECK(z.order() == 2);
  CHECK(z.contains(Perm::parse("(0 2)(1 3)", 4)));

  PermGroup c4 = make(4, {"(0 1 2 3)"});
  CHECK(center_of(c4).order() == 4);
}

TEST_CASE("normality") {
  PermGroup s4 = make(4, {"(0 1)", "(0 1 2 3)"});
  PermGroup v4 = make(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  PermGroup t2 = make(4, {"(0 1)"});
  CHECK(v4.is_normal_in(s4));
  CHECK(!t2.is_normal_in(s4));
  CHECK(normal_closure(s4, t2.generators()).order() == 24);
  CHECK(normal_closure(s4, v4.generators()).order() == 4);
}

TEST_CASE("centralizer in the symmetric group with brute oracle") {
  auto brute = [](const PermGroup& g) {
    std::set<Perm> out;
    for (const Perm& t : all_perms(g.degree())) {
      bool ok = true;
      for (const Perm& s : g.generators())
        if (t.then(s) != s.then(t)) {
          ok = false;
          break;
        }
      if (ok) out.insert(t);
    }
    return out;
  };

  // Transitive path.
  PermGroup c4 = make(4, {"(0 1 2 3)"});
  PermGroup cc = centralizer_in_sym(c4);
  CHECK(cc.order() == 4);
  CHECK(element_set(cc) == brute(c4));

  PermGroup v4 = make(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  PermGroup cv = centralizer_in_sym(v4);
  CHECK(cv.order() == 4);
  CHECK(element_set(cv) == brute(v4));

  PermGroup s4 = make(4, {"(0 1)", "(0 1 2 3)"});
  CHECK(centralizer_in_sym(s4).is_trivial());

  // Intransitive backtrack path.
  PermGroup t2 = make(4, {"(0 1)"});
  PermGroup ct = centralizer_in_sym(t2);
  CHECK(ct.order() == 4);
  CHECK(element_set(ct) == brute(t2));

  PermGroup mixed = make(5, {"(0 1 2)"});
  CHECK(element_set(centralizer_in_sym(mixed)) == brute(mixed));
}

TEST_CASE("normalizer") {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup c4 = make(4, {"(0 1 2 3)"});
  PermGroup n = normalizer_in(s4, c4);
  CHECK(n.order() == 8);
  CHECK(c4.is_subgroup_of(n));

  PermGroup v4 = make(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  CHECK(normalizer_in(s4, v4).order() == 24);
  CHECK(normalizer_in(s4, s4).order() == 24);

  // Non-symmetric ambient goes through element enumeration.
  PermGroup a4 = make(4, {"(0 1 2)", "(1 2 3)"});
  PermGroup h = make(4, {"(0 1)(2 3)"});
  PermGroup na = normalizer_in(a4, h);
  CHECK(na.order() == 4);
  std::set<Perm> oracle;
  for (const Perm& t : a4.elements()) {
    Perm c = h.generators()[0].conjugated_by(t);
    if (h.contains(c)) oracle.insert(t);
  }
  CHECK(element_set(na) == oracle);
}

TEST_CASE("claimed orders are cross-checked") {
  std::vector<Perm> gens = {Perm::parse("(0 1 2 3)", 4)};
  PermGroup wrong = PermGroup::with_known_order(4, gens, 8);
  CHECK_THROWS_AS(wrong.order(), holo::InvariantError);

  PermGroup right = PermGroup::with_known_order(4, gens, 4);
  CHECK(right.order() == 4);

  CHECK(PermGroup::symmetric(6).order() == 720);
}

TEST_CASE("element enumeration respects the cap") {
  PermGroup s4 = make(4, {"(0 1)", "(0 1 2 3)"});
  CHECK_THROWS_AS(s4.elements(10), holo::BoundError);
  CHECK(s4.elements(24).size() == 24);
}
