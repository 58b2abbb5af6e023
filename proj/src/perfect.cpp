#include "holo/perfect.hpp"

#include <algorithm>
#include <random>

#include "holo/errors.hpp"

namespace holo {
namespace {

// Greedy generators for a subgroup given by its member list.
std::vector<Elt> member_gens(const GroupPtr& g, const std::vector<Elt>& members) {
  std::vector<Elt> gens;
  std::size_t covered = 1;
  std::vector<char> have(g->order(), 0);
  have[0] = 1;
  for (Elt m : members) {
    if (have[m]) continue;
    gens.push_back(m);
    Subgroup s = subgroup_closure(g, gens);
    for (Elt e : s.members) have[e] = 1;
    covered = s.members.size();
    if (covered == members.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<Elt> derived_members_of(const GroupPtr& g,
                                    const std::vector<Elt>& members) {
  std::vector<Elt> gens = member_gens(g, members);
  std::vector<char> seed_in(g->order(), 0);
  std::vector<Elt> seeds;
  std::vector<Elt> work;
  auto add_seed = [&](Elt x) {
    if (!seed_in[x]) {
      seed_in[x] = 1;
      seeds.push_back(x);
      work.push_back(x);
    }
  };
  for (Elt a : gens)
    for (Elt b : gens) add_seed(g->comm(a, b));
  while (!work.empty()) {
    Elt x = work.back();
    work.pop_back();
    for (Elt s : gens) add_seed(g->conj(x, s));
  }
  // The seed set is conjugation closed, so plain product closure finishes.
  std::vector<char> in(g->order(), 0);
  std::vector<Elt> out = {0};
  in[0] = 1;
  std::vector<Elt> frontier = {0};
  while (!frontier.empty()) {
    Elt x = frontier.back();
    frontier.pop_back();
    for (Elt s : seeds) {
      Elt p = g->mul(x, s);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
        frontier.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool commute_elementwise(const CayleyGroup& g, const std::vector<Elt>& a,
                         const std::vector<Elt>& b) {
  for (Elt x : a)
    for (Elt y : b)
      if (g.comm(x, y) != 0) return false;
  return true;
}

}  // namespace

KrsDecomposition krs_inn(const GroupPtr& g, const AutGroup& aut) {
  if (!g->is_perfect())
    throw ScopeError("the decomposition route needs a perfect group; " +
                     g->provenance() + " is not perfect");
  KrsDecomposition out;
  out.base = g;
  out.inn = quotient_central(g, g->center_members());
  const GroupPtr& q = out.inn.group;
  const std::vector<Elt>& proj = out.inn.projection;

  // Push each automorphism generator down to Inn(G); well defined because
  // the center is characteristic.
  std::vector<Perm> aut_q;
  for (const Perm& beta : aut.perms.generators()) {
    std::vector<Point> im(q->order());
    for (Elt x = 0; x < g->order(); ++x) im[proj[x]] = proj[beta[x]];
    aut_q.emplace_back(std::move(im));
  }

  // Fuse conjugacy classes into orbits under the automorphism action.
  const std::vector<std::uint32_t>& cls = q->class_of();
  const std::size_t nc = q->class_count();
  std::vector<std::uint32_t> parent(nc);
  for (std::uint32_t c = 0; c < nc; ++c) parent[c] = c;
  auto find = [&](std::uint32_t c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  };
  for (std::uint32_t c = 0; c < nc; ++c) {
    Elt rep = q->class_members(c).front();
    for (const Perm& s : aut_q) {
      std::uint32_t other = find(cls[s[rep]]);
      parent[other] = find(c);
    }
  }
  std::vector<std::vector<Elt>> orbit_members(nc);
  for (std::uint32_t c = 0; c < nc; ++c) {
    const std::vector<Elt>& m = q->class_members(c);
    auto& dst = orbit_members[find(c)];
    dst.insert(dst.end(), m.begin(), m.end());
  }

  // Candidate factors: subgroups generated by single class orbits. Keeping
  // only the inclusion-minimal ones certifies minimality outright: any
  // proper invariant normal subgroup inside a candidate is a union of class
  // orbits and would have contributed a smaller candidate.
  std::vector<std::vector<Elt>> closures;
  for (std::uint32_t c = 0; c < nc; ++c) {
    if (orbit_members[c].empty()) continue;
    if (find(c) == find(cls[0])) continue;  // the identity's orbit
    std::sort(orbit_members[c].begin(), orbit_members[c].end());
    std::vector<Elt> closed = subgroup_closure(q, orbit_members[c]).members;
    if (std::find(closures.begin(), closures.end(), closed) == closures.end())
      closures.push_back(std::move(closed));
  }
  std::vector<std::vector<Elt>> minimal;
  for (const auto& c : closures) {
    bool has_smaller = false;
    for (const auto& other : closures)
      if (other.size() < c.size() &&
          std::includes(c.begin(), c.end(), other.begin(), other.end())) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const auto& a, const auto& b) { return a[1] < b[1]; });

  // Certification: pairwise trivial intersections and commuting factors
  // whose orders multiply to the whole; that pins down an internal direct
  // product with unique coordinates.
  std::size_t product = 1;
  for (const auto& f : minimal) product *= f.size();
  if (product != q->order())
    throw ScopeError(
        "inner quotient has no invariant direct decomposition of this kind");
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      std::vector<Elt> meet;
      std::set_intersection(minimal[i].begin(), minimal[i].end(),
                            minimal[j].begin(), minimal[j].end(),
                            std::back_inserter(meet));
      if (meet.size() != 1 ||
          !commute_elementwise(*q, minimal[i], minimal[j]))
        throw ScopeError(
            "minimal invariant normal subgroups fail to form a direct "
            "decomposition");
    }

  // Coordinates of the internal direct product, factor by factor.
  const std::size_t n = minimal.size();
  out.components.assign(n, std::vector<Elt>(q->order(), 0));
  std::vector<Elt> built = {0};
  std::vector<char> reached(q->order(), 0);
  reached[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elt> next;
    next.reserve(built.size() * minimal[i].size());
    for (Elt e : built)
      for (Elt a : minimal[i]) {
        Elt p = q->mul(e, a);
        if (a != 0) {
          if (reached[p])
            throw InvariantError("direct product coordinates collided");
          reached[p] = 1;
        }
        for (std::size_t j = 0; j < i; ++j)
          out.components[j][p] = out.components[j][e];
        out.components[i][p] = a;
        next.push_back(p);
      }
    built = std::move(next);
  }
  if (built.size() != q->order())
    throw InvariantError("direct product coordinates missed elements");

  // Lift each factor: B_i is the derived subgroup of the conjugation
  // preimage of A_i and must project back onto all of A_i.
  out.factors.resize(n);
  out.lift.assign(n, std::vector<Elt>(q->order(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    KrsFactor& f = out.factors[i];
    f.inn_members = minimal[i];
    for (Elt x = 0; x < g->order(); ++x)
      if (std::binary_search(minimal[i].begin(), minimal[i].end(), proj[x]))
        f.preimage_members.push_back(x);
    f.lifted_members = derived_members_of(g, f.preimage_members);
    std::vector<char> seen(q->order(), 0);
    std::size_t hit = 0;
    for (Elt b : f.lifted_members) {
      if (!seen[proj[b]]) {
        seen[proj[b]] = 1;
        ++hit;
        out.lift[i][proj[b]] = b;  // least lift: members ascend
      }
      if (!std::binary_search(minimal[i].begin(), minimal[i].end(), proj[b]))
        throw InvariantError("lifted factor leaks outside its projection");
    }
    if (hit != minimal[i].size())
      throw InvariantError("derived lift fails to cover its factor");
  }

  // G itself must be the central product of the lifts.
  std::vector<Elt> all_gens;
  for (const KrsFactor& f : out.factors) {
    std::vector<Elt> fg = member_gens(g, f.lifted_members);
    all_gens.insert(all_gens.end(), fg.begin(), fg.end());
  }
  if (subgroup_closure(g, all_gens).members.size() != g->order())
    throw InvariantError("lifted factors fail to generate the group");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!commute_elementwise(*g, out.factors[i].lifted_members,
                               out.factors[j].lifted_members))
        throw InvariantError("lifted factors fail to commute");

  return out;
}

GammaMap gamma_for_subset(const KrsDecomposition& krs,
                          const std::vector<std::uint32_t>& subset) {
  const GroupPtr& g = krs.base;
  std::vector<Elt> conj(g->order());
  for (Elt x = 0; x < g->order(); ++x) {
    Elt a = krs.inn.projection[x];
    Elt h = 0;
    for (std::uint32_t i : subset)
      h = g->mul(h, krs.lift[i][krs.components[i][a]]);
    conj[x] = g->inv(h);
  }
  return GammaMap::from_inner(g, conj);
}

std::optional<Perm> theta_for_subset(const KrsDecomposition& krs,
                                     const std::vector<std::uint32_t>& subset) {
  const GroupPtr& g = krs.base;
  std::vector<Point> images(g->order());
  for (Elt x = 0; x < g->order(); ++x) {
    Elt a = krs.inn.projection[x];
    Elt h = 0;
    for (std::uint32_t i : subset)
      h = g->mul(h, krs.lift[i][krs.components[i][a]]);
    Elt hinv = g->inv(h);
    images[x] = g->mul(hinv, g->mul(hinv, x));
  }
  std::optional<Perm> theta;
  try {
    theta = Perm(std::move(images));
  } catch (const ParseError&) {
    return std::nullopt;  // the split overlap has exponent above two
  }
  GammaMap gm = gamma_for_subset(krs, subset);
  for (Elt y : g->generating_set())
    if (rho_perm(*g, y).conjugated_by(*theta) != nu_perm(gm, (*theta)[y]))
      return std::nullopt;
  return theta;
}

PerfectJEnumeration enumerate_j_perfect(const Holomorph& hol,
                                        const ClassifyBudget& budget) {
  PerfectJEnumeration out{krs_inn(hol.base, hol.aut), {}};
  const std::size_t n = out.krs.factors.size();
  if (n > 10)
    throw ScopeError("too many invariant factors for subset enumeration: " +
                     std::to_string(n));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> subset;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    GammaMap gm = gamma_for_subset(out.krs, subset);
    std::optional<Perm> hint = theta_for_subset(out.krs, subset);
    out.records.push_back(
        PerfectJRecord{subset, classify_regular(hol, gm, hint, budget)});
  }
  std::vector<std::vector<std::uint32_t>> encodings;
  for (const PerfectJRecord& r : out.records) {
    if (!r.record.in_j)
      throw InvariantError("a subset gamma fell outside J");
    encodings.push_back(r.record.gamma.encoding());
  }
  for (std::size_t i = 0; i < encodings.size(); ++i)
    for (std::size_t j = i + 1; j < encodings.size(); ++j)
      if (encodings[i] == encodings[j])
        throw InvariantError("subset gammas collided");
  std::vector<std::size_t> order_idx(out.records.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(),
            [&](std::size_t a, std::size_t b) {
              return encodings[a] < encodings[b];
            });
  std::vector<PerfectJRecord> sorted;
  sorted.reserve(out.records.size());
  for (std::size_t i : order_idx) sorted.push_back(std::move(out.records[i]));
  out.records = std::move(sorted);
  return out;
}

GammaSplit split_from_gamma(const GammaMap& gm) {
  const GroupPtr& g = gm.group();
  if (!g->is_perfect())
    throw ScopeError("gamma splitting applies to perfect groups");
  if (!gm.inner())
    throw ScopeError("gamma splitting needs inner-valued gamma");
  const std::size_t ord = g->order();

  GammaSplit out;
  // Value ids are canonical conjugators; collect the image of gamma.
  std::vector<Elt> value_ids;
  for (Elt x = 0; x < ord; ++x) value_ids.push_back(gm.value_id(x));
  std::sort(value_ids.begin(), value_ids.end());
  value_ids.erase(std::unique(value_ids.begin(), value_ids.end()),
                  value_ids.end());

  GammaMap::ValueId id0 = gm.value_id(0);
  for (Elt x = 0; x < ord; ++x) {
    if (gm.value_id(x) == id0) out.k_members.push_back(x);
    if (std::binary_search(value_ids.begin(), value_ids.end(),
                           *gm.inner_value_id(x)))
      out.h_preimage.push_back(x);
  }
  out.h_members = derived_members_of(g, out.h_preimage);

  const std::vector<Elt>& z = g->center_members();
  out.center_in_kernel = std::includes(out.k_members.begin(),
                                       out.k_members.end(), z.begin(), z.end());

  // Inn(G) = gamma(G) x iota(K): compare orders, meet, and commuting, all
  // at the level of canonical conjugators.
  std::vector<Elt> k_ids;
  for (Elt k : out.k_members) k_ids.push_back(*gm.inner_value_id(k));
  std::sort(k_ids.begin(), k_ids.end());
  k_ids.erase(std::unique(k_ids.begin(), k_ids.end()), k_ids.end());
  std::vector<Elt> meet;
  std::set_intersection(value_ids.begin(), value_ids.end(), k_ids.begin(),
                        k_ids.end(), std::back_inserter(meet));
  std::size_t inn_order = ord / z.size();
  bool commuting = true;
  for (Elt a : value_ids) {
    for (Elt b : k_ids)
      if (gm.inner_value_id(g->comm(a, b)) != *gm.inner_value_id(0)) {
        commuting = false;
        break;
      }
    if (!commuting) break;
  }
  out.inn_is_product = value_ids.size() * k_ids.size() == inn_order &&
                       meet.size() == 1 && commuting;

  out.parts_commute =
      commute_elementwise(*g, out.h_members, out.k_members);

  out.gamma_inverts_h = true;
  for (Elt h : out.h_members)
    if (gm.value_id(h) != *gm.inner_value_id(g->inv(h))) {
      out.gamma_inverts_h = false;
      break;
    }

  std::vector<Elt> hk_meet;
  std::set_intersection(out.h_members.begin(), out.h_members.end(),
                        out.k_members.begin(), out.k_members.end(),
                        std::back_inserter(hk_meet));
  out.product_covers = out.h_members.size() * out.k_members.size() ==
                       ord * hk_meet.size();

  out.theta_defined = true;
  for (Elt w : hk_meet)
    if (g->mul(w, w) != 0) {
      out.theta_defined = false;
      break;
    }
  return out;
}

PairingReport pairing_check(const Holomorph& hol,
                            const PerfectJEnumeration& e,
                            const CentralizerBudget& budget) {
  PairingReport rep;
  rep.inversion_conjugates = true;
  rep.inversion_is_circ_iso = true;
  rep.centralizer_matches = true;
  rep.centralizer_checked = true;
  const std::size_t n = e.krs.factors.size();
  const std::size_t ord = hol.base->order();
  Perm inv = inversion_perm(*hol.base);

  for (const PerfectJRecord& r : e.records) {
    std::vector<std::uint32_t> comp;
    for (std::uint32_t i = 0; i < n; ++i)
      if (!std::binary_search(r.subset.begin(), r.subset.end(), i))
        comp.push_back(i);
    const PerfectJRecord* partner = nullptr;
    for (const PerfectJRecord& c : e.records)
      if (c.subset == comp) partner = &c;
    if (!partner) throw InvariantError("complement record missing");

    // Conjugation by inversion maps this nu image onto the partner's.
    std::vector<Perm> conj_gens;
    for (const Perm& p : r.record.circ.nu_image.generators())
      conj_gens.push_back(p.conjugated_by(inv));
    // Conjugates of a regular group stay regular: order equals the degree.
    PermGroup moved =
        PermGroup::with_known_order(ord, std::move(conj_gens), ord);
    if (!moved.same_group_as(partner->record.circ.nu_image))
      rep.inversion_conjugates = false;

    // Inversion as a map (G, circ_S) -> (G, circ_complement) is an
    // isomorphism; exhaustive at table scale, sampled above it.
    const CayleyGroup& cs = *r.record.circ.circ;
    const CayleyGroup& cc = *partner->record.circ.circ;
    auto iso_at = [&](Elt x, Elt y) {
      return cc.mul(inv[x], inv[y]) == inv[cs.mul(x, y)];
    };
    if (ord <= 2048) {
      for (Elt x = 0; x < ord && rep.inversion_is_circ_iso; ++x)
        for (Elt y = 0; y < ord; ++y)
          if (!iso_at(x, y)) {
            rep.inversion_is_circ_iso = false;
            break;
          }
    } else {
      std::mt19937 rng(7331);
      std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(ord - 1));
      for (int i = 0; i < 1'000'000; ++i)
        if (!iso_at(pick(rng), pick(rng))) {
          rep.inversion_is_circ_iso = false;
          break;
        }
    }

    // Centralizer duality in the full symmetric group.
    try {
      PermGroup c = centralizer_in_sym(r.record.circ.nu_image, budget);
      if (!c.same_group_as(partner->record.circ.nu_image))
        rep.centralizer_matches = false;
    } catch (const BoundError&) {
      rep.centralizer_checked = false;
    }
  }
  return rep;
}

OppositeReplaceResult opposite_replace(const GroupPtr& g, bool right_factor) {
  std::optional<CayleyGroup::ProductStructure> s = g->product_structure();
  if (!s)
    throw ScopeError("opposite replacement needs a product-built group");
  GroupPtr ln = right_factor ? s->left : opposite(s->left);
  GroupPtr rn = right_factor ? opposite(s->right) : s->right;
  ProductResult res = central_product(ln, rn, s->amalgam_pairs);

  OppositeReplaceResult out;
  out.group = res.group;
  out.table_unchanged = same_multiplication(*g, *res.group);

  // Inverting the flipped factor and fixing the other is an isomorphism
  // back to the original whenever it respects the amalgam; extend_hom
  // verifies everything.
  std::vector<Elt> gens, images;
  const GroupPtr& flipped = right_factor ? s->right : s->left;
  const GroupPtr& kept = right_factor ? s->left : s->right;
  for (Elt x : flipped->generating_set()) {
    gens.push_back(right_factor ? res.right_embed[x] : res.left_embed[x]);
    images.push_back(right_factor ? s->right_embed[flipped->inv(x)]
                                  : s->left_embed[flipped->inv(x)]);
  }
  for (Elt y : kept->generating_set()) {
    gens.push_back(right_factor ? res.left_embed[y] : res.right_embed[y]);
    images.push_back(right_factor ? s->left_embed[y] : s->right_embed[y]);
  }
  out.iso = extend_hom(*res.group, *g, gens, images);
  return out;
}

}  // namespace holo
