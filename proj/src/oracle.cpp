#include "holo/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "holo/cayley.hpp"
#include "holo/errors.hpp"

namespace holo {
namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

// Backtracking over gamma tables. Values live in the full automorphism list;
// assigning gamma on a pair (g, h) forces the value at g^{gamma(h)} h, so
// each branch propagates to a closed partial table or dies.
struct GammaTableSearch {
  const CayleyGroup& g;
  std::vector<Perm> auts;
  std::unordered_map<Perm, std::uint32_t, PermHash> aut_index;
  std::vector<std::uint32_t> val;
  std::vector<Elt> trail;
  std::size_t nodes = 0;
  std::size_t max_nodes;
  std::vector<std::vector<std::uint32_t>> tables;

  GammaTableSearch(const CayleyGroup& base, std::vector<Perm> all_auts,
                   std::size_t node_cap)
      : g(base),
        auts(std::move(all_auts)),
        val(base.order(), kUnset),
        max_nodes(node_cap) {
    for (std::uint32_t i = 0; i < auts.size(); ++i) aut_index.emplace(auts[i], i);
  }

  bool assign(Elt x, std::uint32_t a) {
    if (val[x] != kUnset) return val[x] == a;
    if (++nodes > max_nodes)
      throw BoundError("gamma table search exceeded the node budget");
    val[x] = a;
    trail.push_back(x);
    return true;
  }

  // The law instance for the ordered pair (a, b):
  // gamma(a^{gamma(b)} b) = gamma(a) gamma(b).
  bool force(Elt a, Elt b) {
    Elt m = g.mul(auts[val[b]][a], b);
    auto it = aut_index.find(auts[val[a]].then(auts[val[b]]));
    return it != aut_index.end() && assign(m, it->second);
  }

  // Processes every ordered pair touching trail entries from `from` on;
  // the trail grows as forced values land, and those get their own pass.
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        if (!force(trail[i], trail[j])) return false;
        if (!force(trail[j], trail[i])) return false;
      }
    return true;
  }

  void search() {
    Elt x = 0;
    while (x < g.order() && val[x] != kUnset) ++x;
    if (x == g.order()) {
      tables.push_back(val);
      return;
    }
    for (std::uint32_t a = 0; a < auts.size(); ++a) {
      std::size_t mark = trail.size();
      if (assign(x, a) && propagate(mark)) search();
      while (trail.size() > mark) {
        val[trail.back()] = kUnset;
        trail.pop_back();
      }
    }
  }
};

PermGroup nu_group(const GammaMap& gm) {
  const GroupPtr& g = gm.group();
  std::vector<Perm> els;
  els.reserve(g->order());
  for (Elt h = 0; h < g->order(); ++h) els.push_back(nu_perm(gm, h));
  return PermGroup::from_element_set(g->order(), std::move(els));
}

std::size_t perm_order(const Perm& p) {
  std::vector<char> seen(p.degree(), 0);
  std::size_t o = 1;
  for (Point s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (Point x = s; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::vector<Point> subgroup_key(const std::vector<Perm>& els) {
  std::vector<std::vector<Point>> rows;
  rows.reserve(els.size());
  for (const Perm& p : els) rows.push_back(p.images());
  std::sort(rows.begin(), rows.end());
  std::vector<Point> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

// Product closure of base + extra, abandoned once it outgrows cap.
std::optional<std::vector<Perm>> closed_with(const std::vector<Perm>& base,
                                             const Perm& extra,
                                             std::size_t cap) {
  std::set<std::vector<Point>> seen;
  std::vector<Perm> els;
  auto add = [&](const Perm& p) {
    if (!seen.insert(p.images()).second) return false;
    els.push_back(p);
    return true;
  };
  for (const Perm& p : base) add(p);
  add(extra);
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (add(els[i].then(els[j])) && els.size() > cap) return std::nullopt;
      if (add(els[j].then(els[i])) && els.size() > cap) return std::nullopt;
    }
  }
  return els;
}

}  // namespace

OracleEnumeration enumerate_regular_in_hol(const Holomorph& hol,
                                           const SearchBudget& budget) {
  const GroupPtr& g = hol.base;
  if (g->order() > budget.max_group_order)
    throw BoundError("group order " + std::to_string(g->order()) +
                     " exceeds the gamma search budget " +
                     std::to_string(budget.max_group_order));
  GammaTableSearch s(*g, hol.aut.perms.elements(), budget.max_nodes);
  std::uint32_t id = s.aut_index.at(Perm(g->order()));
  s.assign(0, id);
  if (s.propagate(0)) s.search();

  OracleEnumeration out;
  out.nodes_used = s.nodes;
  for (const std::vector<std::uint32_t>& table : s.tables) {
    std::vector<Perm> values;
    values.reserve(table.size());
    for (std::uint32_t a : table) values.push_back(s.auts[a]);
    GammaMap gm = GammaMap::from_perm_values(g, values);
    out.hits.push_back(OracleHit{gm, nu_group(gm)});
  }
  std::sort(out.hits.begin(), out.hits.end(),
            [](const OracleHit& a, const OracleHit& b) {
              return a.gamma.encoding() < b.gamma.encoding();
            });
  return out;
}

OracleEnumeration enumerate_j_bruteforce(const Holomorph& hol,
                                         const SearchBudget& budget) {
  OracleEnumeration all = enumerate_regular_in_hol(hol, budget);
  OracleEnumeration out;
  out.nodes_used = all.nodes_used;
  for (OracleHit& hit : all.hits) {
    std::vector<Perm> els = hit.nu.elements();
    std::set<std::vector<Point>> members;
    for (const Perm& p : els) members.insert(p.images());
    bool normal = true;
    for (const Perm& t : hol.group.generators()) {
      for (const Perm& p : els)
        if (!members.count(p.conjugated_by(t).images())) {
          normal = false;
          break;
        }
      if (!normal) break;
    }
    if (normal) out.hits.push_back(std::move(hit));
  }
  return out;
}

std::vector<PermGroup> regular_subgroups_by_closure(const Holomorph& hol,
                                                    const SearchBudget& budget) {
  const std::size_t n = hol.base->order();
  if (n > budget.max_group_order)
    throw BoundError("group order " + std::to_string(n) +
                     " exceeds the subgroup search budget " +
                     std::to_string(budget.max_group_order));
  std::vector<Perm> ambient = hol.group.elements();
  // Only elements whose order divides |G| can live in an order-|G| subgroup.
  std::vector<Perm> cands;
  for (const Perm& p : ambient)
    if (n % perm_order(p) == 0) cands.push_back(p);

  std::set<std::vector<Point>> seen;
  std::vector<std::vector<Perm>> queue = {{Perm(hol.group.degree())}};
  seen.insert(subgroup_key(queue[0]));
  std::vector<std::vector<Perm>> full;
  std::size_t nodes = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    // Copy: the queue reallocates while we extend.
    std::vector<Perm> sub = queue[qi];
    if (sub.size() == n) {
      full.push_back(sub);
      continue;
    }
    std::set<std::vector<Point>> in_sub;
    for (const Perm& p : sub) in_sub.insert(p.images());
    for (const Perm& p : cands) {
      if (in_sub.count(p.images())) continue;
      if (++nodes > budget.max_nodes)
        throw BoundError("subgroup closure search exceeded the node budget");
      std::optional<std::vector<Perm>> bigger = closed_with(sub, p, n);
      if (!bigger || n % bigger->size() != 0) continue;
      if (seen.insert(subgroup_key(*bigger)).second)
        queue.push_back(std::move(*bigger));
    }
  }

  std::vector<PermGroup> out;
  for (std::vector<Perm>& els : full) {
    // Transitive of order equal to degree means regular.
    std::set<Point> images_of_zero;
    for (const Perm& p : els) images_of_zero.insert(p[0]);
    if (images_of_zero.size() == n)
      out.push_back(PermGroup::from_element_set(hol.group.degree(),
                                                std::move(els)));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    return subgroup_key(a.elements()) < subgroup_key(b.elements());
  });
  return out;
}

bool normalizer_equals_hol(const Holomorph& hol, const PermGroup& n) {
  if (n.degree() != hol.base->order() || !n.is_regular())
    throw ParseError("expected a regular subgroup on the group's domain");
  GroupPtr ng = from_regular(n);
  AutGroup na = automorphism_group(ng);
  // The normalizer of a regular subgroup is a holomorph of it, so comparing
  // against Hol(G) reduces to comparing automorphism group orders.
  bool verdict = na.order() * n.order() == hol.group.order();
  if (hol.base->order() <= 8) {
    PermGroup literal =
        normalizer_in(PermGroup::symmetric(n.degree()), n);
    if (literal.same_group_as(hol.group) != verdict)
      throw InvariantError(
          "normalizer order shortcut contradicts the literal computation");
  }
  return verdict;
}

}  // namespace holo
