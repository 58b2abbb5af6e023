#include "holo/perm_group.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_set>

#include "holo/errors.hpp"

namespace holo {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw BoundError("group order overflows 64 bits");
  return a * b;
}

std::uint64_t factorial_u64(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

Point smallest_moved_point(const Perm& p) {
  for (Point x = 0; x < p.degree(); ++x)
    if (p[x] != x) return x;
  throw InvariantError("identity has no moved point");
}

// Deterministic incremental Schreier-Sims. Levels define their groups as
// generated by the stored generators; verify_level certifies that every
// Schreier generator of a level sifts through the deeper levels, which by
// Schreier's lemma makes the stabilizer chain exact. An optional target
// order stops the build as soon as the transversal product reaches it;
// since the product never exceeds the true order, reaching a correct
// target certifies completeness.
struct ChainBuilder {
  std::size_t degree;
  std::optional<std::uint64_t> target;
  std::vector<ChainLevel> levels;
  bool stopped = false;

  std::uint64_t product() const {
    std::uint64_t p = 1;
    for (const auto& l : levels) p = checked_mul(p, l.orbit.size());
    return p;
  }

  void add_level(Point base) {
    ChainLevel l;
    l.base = base;
    levels.push_back(std::move(l));
  }

  void rebuild_orbit(std::size_t i) {
    ChainLevel& l = levels[i];
    l.orbit.clear();
    l.where.assign(degree, -1);
    l.parent.assign(degree, -1);
    l.via_gen.assign(degree, -1);
    l.orbit.push_back(l.base);
    l.where[l.base] = 0;
    for (std::size_t pos = 0; pos < l.orbit.size(); ++pos) {
      Point p = l.orbit[pos];
      for (std::size_t gi = 0; gi < l.gens.size(); ++gi) {
        Point q = l.gens[gi][p];
        if (l.where[q] < 0) {
          l.where[q] = static_cast<std::int32_t>(l.orbit.size());
          l.parent[q] = static_cast<std::int32_t>(p);
          l.via_gen[q] = static_cast<std::int32_t>(gi);
          l.orbit.push_back(q);
        }
      }
    }
  }

  // p := p * u_x^{-1} at level i, where x = base^p is already in the orbit.
  void divide_by_representative(Perm& p, std::size_t i, Point x) const {
    const ChainLevel& l = levels[i];
    Point c = x;
    while (l.parent[c] >= 0) {
      std::int32_t gi = l.via_gen[c];
      p = p.then(l.inv_gens[gi]);
      c = static_cast<Point>(l.parent[c]);
    }
  }

  Perm sift(Perm p, std::size_t from) const {
    for (std::size_t j = from; j < levels.size(); ++j) {
      const ChainLevel& l = levels[j];
      Point x = p[l.base];
      if (l.where[x] < 0) return p;
      divide_by_representative(p, j, x);
    }
    return p;
  }

  Perm representative(std::size_t i, Point x) const {
    const ChainLevel& l = levels[i];
    std::vector<std::int32_t> path;
    Point c = x;
    while (l.parent[c] >= 0) {
      path.push_back(l.via_gen[c]);
      c = static_cast<Point>(l.parent[c]);
    }
    Perm u(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      u = u.then(l.gens[*it]);
    return u;
  }

  // Returns false when the target order was reached and the build stopped.
  bool verify_level(std::size_t i) {
    for (;;) {
      rebuild_orbit(i);
      if (target && product() == *target) {
        stopped = true;
        return false;
      }
      ChainLevel& l = levels[i];
      bool clean = true;
      for (std::size_t pos = 0; pos < l.orbit.size() && clean; ++pos) {
        Point x = l.orbit[pos];
        Perm u = representative(i, x);
        for (std::size_t gi = 0; gi < l.gens.size(); ++gi) {
          Perm sg = u.then(l.gens[gi]);
          divide_by_representative(sg, i, l.gens[gi][x]);
          Perm residue = sift(std::move(sg), i + 1);
          if (residue.is_identity()) continue;
          std::size_t j = i + 1;
          if (j == levels.size()) add_level(smallest_moved_point(residue));
          levels[j].inv_gens.push_back(residue.inverse());
          levels[j].gens.push_back(std::move(residue));
          if (!verify_level(j)) return false;
          clean = false;  // rescan this level: deeper chain changed
          break;
        }
      }
      if (clean) return true;
    }
  }
};

StabChain build_chain(std::size_t degree, const std::vector<Perm>& gens,
                      std::optional<std::uint64_t> target) {
  ChainBuilder b{degree, target, {}, false};
  std::vector<Perm> seed;
  for (const Perm& g : gens)
    if (!g.is_identity()) seed.push_back(g);
  if (!seed.empty()) {
    Point base = seed[0].degree();
    for (const Perm& g : seed) base = std::min(base, smallest_moved_point(g));
    b.add_level(base);
    for (Perm& g : seed) {
      b.levels[0].inv_gens.push_back(g.inverse());
      b.levels[0].gens.push_back(std::move(g));
    }
    b.verify_level(0);
  }
  StabChain chain;
  chain.degree = degree;
  chain.levels = std::move(b.levels);
  for (auto& l : chain.levels)
    if (l.orbit.empty()) throw InvariantError("chain level without orbit");
  chain.order = 1;
  for (const auto& l : chain.levels)
    chain.order = checked_mul(chain.order, l.orbit.size());
  if (target && chain.order != *target)
    throw InvariantError("claimed group order does not match the built chain");
  return chain;
}

void for_each_element(const StabChain& chain,
                      const std::function<void(const Perm&)>& fn) {
  if (chain.levels.empty()) {
    fn(Perm(chain.degree));
    return;
  }
  // g = u^(L-1) * ... * u^(0), deepest level in the outer loop.
  std::function<void(std::size_t, const Perm&)> rec =
      [&](std::size_t level_plus_one, const Perm& acc) {
        if (level_plus_one == 0) {
          fn(acc);
          return;
        }
        std::size_t i = level_plus_one - 1;
        for (Point x : chain.levels[i].orbit)
          rec(i, acc.then(chain.representative(i, x)));
      };
  rec(chain.levels.size(), Perm(chain.degree));
}

}  // namespace

bool StabChain::contains(const Perm& p) const {
  Perm r = p;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const ChainLevel& l = levels[j];
    Point x = r[l.base];
    if (l.where[x] < 0) return false;
    Point c = x;
    while (l.parent[c] >= 0) {
      r = r.then(l.inv_gens[l.via_gen[c]]);
      c = static_cast<Point>(l.parent[c]);
    }
  }
  return r.is_identity();
}

Perm StabChain::representative(std::size_t level, Point x) const {
  const ChainLevel& l = levels[level];
  if (l.where[x] < 0) throw InvariantError("point outside level orbit");
  std::vector<std::int32_t> path;
  Point c = x;
  while (l.parent[c] >= 0) {
    path.push_back(l.via_gen[c]);
    c = static_cast<Point>(l.parent[c]);
  }
  Perm u(degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = u.then(l.gens[*it]);
  return u;
}

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {
  if (degree == 0) throw Error("degree must be positive");
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)) {
  if (degree == 0) throw Error("degree must be positive");
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw Error("generator degree mismatch");
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<Point> t(degree);
    for (std::size_t i = 0; i < degree; ++i) t[i] = static_cast<Point>(i);
    std::swap(t[0], t[1]);
    gens.emplace_back(t);
  }
  if (degree >= 3) {
    std::vector<Point> c(degree);
    for (std::size_t i = 0; i < degree; ++i)
      c[i] = static_cast<Point>((i + 1) % degree);
    gens.emplace_back(c);
  }
  return with_known_order(degree, std::move(gens), factorial_u64(degree));
}

PermGroup PermGroup::with_known_order(std::size_t degree,
                                      std::vector<Perm> gens,
                                      std::uint64_t order) {
  PermGroup g(degree, std::move(gens));
  g.claimed_order_ = order;
  return g;
}

PermGroup PermGroup::from_element_set(std::size_t degree,
                                      std::vector<Perm> elements) {
  std::vector<Perm> gens;
  for (Perm& p : elements)
    if (!p.is_identity()) gens.push_back(std::move(p));
  std::uint64_t count = gens.size() + 1;  // plus identity
  return with_known_order(degree, std::move(gens), count);
}

const StabChain& PermGroup::chain() const {
  if (!chain_)
    chain_ = std::make_shared<const StabChain>(
        build_chain(degree_, gens_, claimed_order_));
  return *chain_;
}

std::uint64_t PermGroup::order() const { return chain().order; }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return chain().contains(p);
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> out;
  std::vector<bool> seen(degree_, false);
  out.push_back(x);
  seen[x] = true;
  for (std::size_t pos = 0; pos < out.size(); ++pos)
    for (const Perm& g : gens_) {
      Point q = g[out[pos]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

bool PermGroup::is_regular() const {
  return is_transitive() && order() == degree_;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw BoundError("element enumeration exceeds cap");
  std::vector<Perm> out;
  out.reserve(order());
  for_each_element(chain(), [&](const Perm& p) { out.push_back(p); });
  return out;
}

Perm PermGroup::regular_element_mapping_zero_to(Point x) const {
  if (!is_regular()) throw Error("group is not regular");
  if (chain().levels.empty()) {
    if (x != 0) throw InvariantError("trivial group has a single point");
    return Perm(degree_);
  }
  if (chain().levels[0].base != 0)
    throw InvariantError("regular chain must be based at 0");
  return chain().representative(0, x);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const Perm& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::normalizes(const PermGroup& other) const {
  for (const Perm& t : gens_)
    for (const Perm& r : other.generators())
      if (!other.contains(r.conjugated_by(t))) return false;
  return true;
}

bool PermGroup::centralizes(const PermGroup& other) const {
  for (const Perm& a : gens_)
    for (const Perm& b : other.generators())
      if (a.then(b) != b.then(a)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& ambient) const {
  return ambient.normalizes(*this);
}

PermGroup PermGroup::conjugated_by(const Perm& t) const {
  std::vector<Perm> gens;
  gens.reserve(gens_.size());
  for (const Perm& g : gens_) gens.push_back(g.conjugated_by(t));
  if (chain_ || claimed_order_)
    return with_known_order(degree_, std::move(gens), order());
  return PermGroup(degree_, std::move(gens));
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  return degree_ == other.degree_ && order() == other.order() &&
         is_subgroup_of(other);
}

PermGroup normal_closure(const PermGroup& ambient,
                         const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  for (const Perm& p : seed)
    if (!p.is_identity()) gens.push_back(p);
  std::vector<Perm> frontier = gens;
  for (;;) {
    PermGroup current(ambient.degree(), gens);
    std::vector<Perm> added;
    for (const Perm& r : frontier)
      for (const Perm& s : ambient.generators()) {
        Perm c = r.conjugated_by(s);
        if (!current.contains(c)) {
          bool dup = false;
          for (const Perm& a : added)
            if (a == c) {
              dup = true;
              break;
            }
          if (!dup) added.push_back(std::move(c));
        }
      }
    if (added.empty()) return current;
    for (const Perm& a : added) gens.push_back(a);
    frontier = std::move(added);
  }
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> seed;
  const auto& gens = g.generators();
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = a.inverse().then(b.inverse()).then(a).then(b);
      if (!c.is_identity()) seed.push_back(std::move(c));
    }
  return normal_closure(g, seed);
}

PermGroup center_of(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> central;
  for (const Perm& p : g.elements(cap)) {
    bool commutes = true;
    for (const Perm& s : g.generators())
      if (p.then(s) != s.then(p)) {
        commutes = false;
        break;
      }
    if (commutes) central.push_back(p);
  }
  return PermGroup::from_element_set(g.degree(), std::move(central));
}

namespace {

// Images of a candidate centralizing permutation are forced along a
// spanning tree of each orbit: sigma(x^s) = sigma(x)^s.
struct OrbitTree {
  std::vector<Point> points;           // BFS order
  std::vector<std::int32_t> parent;    // in terms of points, -1 at root
  std::vector<std::int32_t> via_gen;
};

OrbitTree orbit_tree(const std::vector<Perm>& gens, std::size_t degree,
                     Point root, std::vector<bool>& seen) {
  OrbitTree t;
  t.parent.assign(degree, -1);
  t.via_gen.assign(degree, -1);
  t.points.push_back(root);
  seen[root] = true;
  for (std::size_t pos = 0; pos < t.points.size(); ++pos) {
    Point p = t.points[pos];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Point q = gens[gi][p];
      if (!seen[q]) {
        seen[q] = true;
        t.parent[q] = static_cast<std::int32_t>(p);
        t.via_gen[q] = static_cast<std::int32_t>(gi);
        t.points.push_back(q);
      }
    }
  }
  return t;
}

bool commutes_with_all(const std::vector<Point>& img,
                       const std::vector<Perm>& gens) {
  for (const Perm& s : gens)
    for (std::size_t x = 0; x < img.size(); ++x)
      if (img[s[static_cast<Point>(x)]] != s[img[x]]) return false;
  return true;
}

}  // namespace

PermGroup centralizer_in_sym(const PermGroup& g,
                             const CentralizerBudget& budget) {
  const std::size_t n = g.degree();
  const auto& gens = g.generators();
  if (gens.empty()) {
    // Centralizer of the trivial group is the full symmetric group.
    if (n > 8)
      throw BoundError("centralizer of trivial group is the full symmetric group");
    return PermGroup::symmetric(n);
  }

  if (g.is_transitive()) {
    if (n > budget.max_transitive_degree)
      throw BoundError("transitive centralizer degree bound exceeded");
    std::vector<bool> seen(n, false);
    OrbitTree tree = orbit_tree(gens, n, 0, seen);
    std::vector<Perm> found;
    std::vector<Point> img(n);
    std::vector<bool> used(n);
    for (Point c = 0; c < n; ++c) {
      img[0] = c;
      for (std::size_t pos = 1; pos < tree.points.size(); ++pos) {
        Point x = tree.points[pos];
        img[x] = gens[tree.via_gen[x]][img[tree.parent[x]]];
      }
      std::fill(used.begin(), used.end(), false);
      bool bijective = true;
      for (Point v : img) {
        if (used[v]) {
          bijective = false;
          break;
        }
        used[v] = true;
      }
      if (bijective && commutes_with_all(img, gens))
        found.emplace_back(img);
    }
    return PermGroup::from_element_set(n, std::move(found));
  }

  if (n > budget.max_backtrack_degree)
    throw BoundError("centralizer backtrack degree bound exceeded");

  // Orbit decomposition; candidate images of each orbit root are tried in
  // ascending order and propagate along the orbit tree.
  std::vector<OrbitTree> trees;
  {
    std::vector<bool> seen(n, false);
    for (Point r = 0; r < n; ++r)
      if (!seen[r]) trees.push_back(orbit_tree(gens, n, r, seen));
  }
  std::vector<Point> img(n, 0);
  std::vector<bool> used(n, false);
  std::vector<Perm> found;
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == trees.size()) {
      if (commutes_with_all(img, gens)) found.emplace_back(img);
      return;
    }
    const OrbitTree& t = trees[k];
    for (Point c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (++nodes > budget.max_nodes)
        throw BoundError("centralizer node budget exceeded");
      std::vector<Point> placed;
      bool ok = true;
      img[t.points[0]] = c;
      used[c] = true;
      placed.push_back(c);
      for (std::size_t pos = 1; pos < t.points.size() && ok; ++pos) {
        Point x = t.points[pos];
        Point v = gens[t.via_gen[x]][img[t.parent[x]]];
        if (used[v]) {
          ok = false;
          break;
        }
        img[x] = v;
        used[v] = true;
        placed.push_back(v);
      }
      if (ok) rec(k + 1);
      for (Point v : placed) used[v] = false;
    }
  };
  rec(0);
  return PermGroup::from_element_set(n, std::move(found));
}

PermGroup normalizer_in(const PermGroup& ambient, const PermGroup& h,
                        const NormalizerBudget& budget) {
  if (ambient.degree() != h.degree())
    throw Error("normalizer degree mismatch");
  const std::size_t n = ambient.degree();

  auto normalizes_h = [&](const Perm& t) {
    for (const Perm& r : h.generators())
      if (!h.contains(r.conjugated_by(t))) return false;
    return true;
  };

  if (n <= budget.max_symmetric_degree &&
      ambient.order() == factorial_u64(n)) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
    std::vector<Perm> found;
    do {
      Perm t{std::vector<Point>(img)};
      if (normalizes_h(t)) found.push_back(std::move(t));
    } while (std::next_permutation(img.begin(), img.end()));
    return PermGroup::from_element_set(n, std::move(found));
  }

  if (ambient.order() > budget.max_ambient_order)
    throw BoundError("normalizer ambient order bound exceeded");
  std::vector<Perm> found;
  for_each_element(ambient.chain(), [&](const Perm& t) {
    if (normalizes_h(t)) found.push_back(t);
  });
  return PermGroup::from_element_set(n, std::move(found));
}

}  // namespace holo
