#include "holo/gamma.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "holo/errors.hpp"

namespace holo {
namespace {

std::vector<Elt> center_coset_canon(const CayleyGroup& g) {
  const std::vector<Elt>& z = g.center_members();
  std::vector<Elt> canon(g.order());
  for (Elt x = 0; x < g.order(); ++x) {
    Elt best = g.mul(x, z[0]);
    for (std::size_t i = 1; i < z.size(); ++i)
      best = std::min(best, g.mul(x, z[i]));
    canon[x] = best;
  }
  return canon;
}

// Finds c with x^{iota(c)} = image(x) for every generator, scanning all
// elements; nullopt when the map is not conjugation by anything.
template <typename ImageFn>
std::optional<Elt> conjugator_solving(const CayleyGroup& g,
                                      const std::vector<Elt>& gens,
                                      ImageFn image) {
  for (Elt c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (Elt x : gens)
      if (g.conj(x, c) != image(x)) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace

GammaMap GammaMap::from_inner(GroupPtr g, const std::vector<Elt>& conjugators) {
  if (conjugators.size() != g->order())
    throw Error("conjugator vector length mismatch");
  GammaMap gm;
  gm.inner_ = true;
  gm.canon_ = center_coset_canon(*g);
  gm.id_of_.resize(g->order());
  for (Elt x = 0; x < g->order(); ++x) gm.id_of_[x] = gm.canon_[conjugators[x]];
  gm.g_ = std::move(g);
  return gm;
}

GammaMap GammaMap::from_perm_values(GroupPtr g,
                                    const std::vector<Perm>& values) {
  if (values.size() != g->order())
    throw Error("value vector length mismatch");
  for (const Perm& p : values)
    if (p.degree() != g->order()) throw Error("gamma value degree mismatch");

  // Prefer conjugator storage whenever possible: it is the canonical form.
  const std::vector<Elt>& gens = g->generating_set();
  std::vector<Elt> conj(g->order());
  bool all_inner = true;
  for (Elt x = 0; x < g->order() && all_inner; ++x) {
    const Perm& p = values[x];
    auto c = conjugator_solving(*g, gens, [&](Elt t) { return p[t]; });
    // Generator agreement extends to full agreement only if p is a
    // homomorphism, which callers may not guarantee; verify the whole perm.
    if (c) {
      for (Elt t = 0; t < g->order(); ++t)
        if (g->conj(t, *c) != p[t]) {
          c.reset();
          break;
        }
    }
    if (c)
      conj[x] = *c;
    else
      all_inner = false;
  }
  if (all_inner) return from_inner(std::move(g), conj);

  if (g->order() > kMaxTableOrder)
    throw BoundError("non-inner gamma values above the table cap");
  GammaMap gm;
  gm.inner_ = false;
  gm.id_of_.resize(g->order());
  std::unordered_map<Perm, ValueId, PermHash> seen;
  for (Elt x = 0; x < g->order(); ++x) {
    auto [it, fresh] = seen.try_emplace(
        values[x], static_cast<ValueId>(gm.pool_.size()));
    if (fresh) {
      gm.pool_.push_back(values[x]);
      gm.pool_inv_.push_back(values[x].inverse());
    }
    gm.id_of_[x] = it->second;
  }
  gm.g_ = std::move(g);
  return gm;
}

GammaMap GammaMap::trivial_style(GroupPtr g) {
  std::vector<Elt> conj(g->order(), 0);
  return from_inner(std::move(g), conj);
}

GammaMap GammaMap::lambda_style(GroupPtr g) {
  std::vector<Elt> conj(g->order());
  for (Elt x = 0; x < g->order(); ++x) conj[x] = g->inv(x);
  return from_inner(std::move(g), conj);
}

std::size_t GammaMap::value_count() const {
  if (!inner_) return pool_.size();
  std::vector<ValueId> ids = id_of_;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids.size();
}

Elt GammaMap::apply(ValueId v, Elt x) const {
  return inner_ ? g_->conj(x, v) : pool_[v][x];
}

Elt GammaMap::apply_inverse(ValueId v, Elt x) const {
  return inner_ ? g_->conj(x, g_->inv(v)) : pool_inv_[v][x];
}

std::optional<GammaMap::ValueId> GammaMap::pool_lookup(const Perm& p) const {
  for (ValueId i = 0; i < pool_.size(); ++i)
    if (pool_[i] == p) return i;
  return std::nullopt;
}

std::optional<GammaMap::ValueId> GammaMap::compose(ValueId a, ValueId b) const {
  if (inner_) return canon_[g_->mul(a, b)];
  return pool_lookup(pool_[a].then(pool_[b]));
}

std::optional<GammaMap::ValueId> GammaMap::conjugate_by_aut(
    ValueId v, const Perm& beta) const {
  if (inner_) return canon_[beta[v]];
  return pool_lookup(beta.inverse().then(pool_[v]).then(beta));
}

Perm GammaMap::value_perm(ValueId v) const {
  return inner_ ? iota_perm(*g_, v) : pool_[v];
}

Elt GammaMap::inner_conjugator(ValueId v) const {
  if (!inner_) throw Error("gamma map does not use conjugator storage");
  return v;
}

std::optional<GammaMap::ValueId> GammaMap::inner_value_id(Elt c) const {
  if (inner_) return canon_[c];
  return pool_lookup(iota_perm(*g_, c));
}

std::vector<std::uint32_t> GammaMap::encoding() const {
  std::vector<std::uint32_t> enc;
  if (inner_) {
    enc.reserve(1 + id_of_.size());
    enc.push_back(1);
    enc.insert(enc.end(), id_of_.begin(), id_of_.end());
  } else {
    enc.reserve(1 + id_of_.size() * g_->order());
    enc.push_back(0);
    for (ValueId v : id_of_)
      for (Point p : pool_[v].images()) enc.push_back(p);
  }
  return enc;
}

std::uint64_t GammaMap::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t w : encoding()) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

bool validate_gamma_regular(const GammaMap& gm) {
  const CayleyGroup& g = *gm.group();
  const std::size_t n = g.order();
  // gamma(0) must be the identity automorphism.
  for (Elt x = 0; x < n; ++x)
    if (gm.apply(gm.value_id(0), x) != x) return false;
  // Pool values must be automorphisms; conjugations always are.
  if (!gm.inner()) {
    std::vector<char> checked(n, 0);
    for (Elt x = 0; x < n; ++x) {
      if (checked[gm.value_id(x)]) continue;
      checked[gm.value_id(x)] = 1;
      if (!is_automorphism(g, gm.value_perm(gm.value_id(x)))) return false;
    }
  }
  for (Elt a = 0; a < n; ++a) {
    GammaMap::ValueId va = gm.value_id(a);
    for (Elt b = 0; b < n; ++b) {
      std::optional<GammaMap::ValueId> left = gm.compose(va, gm.value_id(b));
      if (!left || *left != gm.value_id(gm.circ(a, b))) return false;
    }
  }
  return true;
}

bool validate_gamma_normal(const GammaMap& gm, const AutGroup& aut) {
  const CayleyGroup& g = *gm.group();
  const std::size_t n = g.order();
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) {
      std::optional<GammaMap::ValueId> rl =
          gm.compose(gm.value_id(b), gm.value_id(a));
      if (!rl || *rl != gm.value_id(g.mul(a, b))) return false;
    }
  for (const Perm& beta : aut.perms.generators())
    for (Elt a = 0; a < n; ++a) {
      std::optional<GammaMap::ValueId> tw =
          gm.conjugate_by_aut(gm.value_id(a), beta);
      if (!tw || *tw != gm.value_id(beta[a])) return false;
    }
  return true;
}

CommutatorIdentityReport commutator_identity_check(const GammaMap& gm,
                                                   const AutGroup& aut) {
  const CayleyGroup& g = *gm.group();
  const std::size_t n = g.order();
  CommutatorIdentityReport rep;

  rep.aut_identity = true;
  for (const Perm& beta : aut.perms.generators()) {
    for (Elt x = 0; x < n && rep.aut_identity; ++x) {
      // gamma applied to g^beta g^{-1} against the perm commutator
      // gamma(g)^{-1} beta^{-1} gamma(g) beta.
      Elt arg = g.mul(beta[x], g.inv(x));
      if (gm.inner()) {
        // [iota(c), beta] = iota(c^{-1} beta(c)).
        Elt c = gm.inner_conjugator(gm.value_id(x));
        std::optional<GammaMap::ValueId> rhs =
            gm.inner_value_id(g.mul(g.inv(c), beta[c]));
        rep.aut_identity = rhs && gm.value_id(arg) == *rhs;
      } else {
        Perm vx = gm.value_perm(gm.value_id(x));
        Perm lhs = gm.value_perm(gm.value_id(arg));
        Perm rhs = vx.inverse().then(beta.inverse()).then(vx).then(beta);
        rep.aut_identity = lhs == rhs;
      }
    }
    if (!rep.aut_identity) break;
  }

  rep.inner_identity = true;
  rep.central_congruence = true;
  const std::vector<Elt>& z = g.center_members();
  for (Elt x = 0; x < n; ++x) {
    GammaMap::ValueId vx = gm.value_id(x);
    for (Elt h = 0; h < n; ++h) {
      // [gamma(x), h] = (h^{gamma(x)})^{-1} h lives in G itself.
      Elt tw = g.mul(g.inv(gm.apply(vx, h)), h);
      // [h, x^{-1}] = h^{-1} x h x^{-1}.
      Elt arg = g.mul(g.mul(g.mul(g.inv(h), x), h), g.inv(x));
      std::optional<GammaMap::ValueId> tw_id = gm.inner_value_id(tw);
      if (!tw_id || gm.value_id(arg) != *tw_id) rep.inner_identity = false;
      // [x^{-1}, gamma(h^{-1})] = x (x^{-1})^{gamma(h^{-1})}.
      Elt other = g.mul(x, gm.apply(gm.value_id(g.inv(h)), g.inv(x)));
      if (!std::binary_search(z.begin(), z.end(),
                              g.mul(g.inv(tw), other)))
        rep.central_congruence = false;
    }
    if (!rep.inner_identity && !rep.central_congruence) break;
  }
  return rep;
}

bool skew_brace_check(const GammaMap& gm, std::size_t sample_cap) {
  const CayleyGroup& g = *gm.group();
  const std::size_t n = g.order();
  auto holds = [&](Elt a, Elt b, Elt k) {
    Elt lhs = gm.circ(g.mul(a, b), k);
    Elt rhs = g.mul(g.mul(gm.circ(a, k), g.inv(k)), gm.circ(b, k));
    return lhs == rhs;
  };
  if (n <= 128) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        for (Elt k = 0; k < n; ++k)
          if (!holds(a, b, k)) return false;
    return true;
  }
  std::mt19937 rng(4242);
  std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(n - 1));
  for (std::size_t i = 0; i < sample_cap; ++i)
    if (!holds(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

Perm nu_perm(const GammaMap& gm, Elt h) {
  const std::size_t n = gm.group()->order();
  std::vector<Point> images(n);
  for (Elt x = 0; x < n; ++x) images[x] = gm.circ(x, h);
  return Perm(std::move(images));
}

namespace {

// Cayley backend for (G, circ). Inverses come from solving y circ x = 0,
// which gives y = (x^{-1})^{gamma(x)^{-1}}; a left inverse is the inverse
// once the twisting law holds.
class TwistedGroup final : public CayleyGroup {
 public:
  TwistedGroup(GammaMap gm, std::string provenance)
      : CayleyGroup(gm.group()->order(), std::move(provenance)),
        gm_(std::move(gm)) {
    if (order() <= kMaxTableOrder) {
      labels_.resize(order());
      for (Elt x = 0; x < order(); ++x) labels_[x] = gm_.group()->label(x);
    }
    finish_init();
  }

  Elt mul(Elt x, Elt y) const override { return gm_.circ(x, y); }

 protected:
  Elt inv_impl(Elt x) const override {
    Elt y = gm_.apply_inverse(gm_.value_id(x), gm_.group()->inv(x));
    if (mul(y, x) != 0 || mul(x, y) != 0)
      throw InvariantError("twisted inverse failed; gamma map is invalid");
    return y;
  }

 private:
  GammaMap gm_;
};

}  // namespace

CircStructure circ_structure(const GammaMap& gm) {
  if (!validate_gamma_regular(gm))
    throw ParseError("gamma map violates the twisting law");
  GroupPtr circ = std::make_shared<TwistedGroup>(
      gm, "twist(" + gm.group()->provenance() + ")");
  std::vector<Perm> gens;
  for (Elt t : circ->generating_set()) gens.push_back(nu_perm(gm, t));
  // nu is a homomorphism from (G, circ) into S(G) with regular image, so the
  // images of a circ generating set generate all of nu(G).
  PermGroup nu = PermGroup::with_known_order(circ->order(), std::move(gens),
                                             circ->order());
  return CircStructure{gm, std::move(circ), std::move(nu)};
}

GammaMap gamma_from_regular(const PermGroup& n, const GroupPtr& g) {
  if (n.degree() != g->order() || n.order() != g->order() || !n.is_regular())
    throw Error("gamma recovery needs a regular group on the element set");
  const std::vector<Elt>& gens = g->generating_set();
  const std::size_t ord = g->order();
  std::vector<Elt> conj(ord, 0);
  std::vector<Perm> gamma_perms;
  bool all_inner = true;
  for (Elt h = 0; h < ord; ++h) {
    Perm nu_h = n.regular_element_mapping_zero_to(h);
    Elt hinv = g->inv(h);
    // gamma(h): x -> (x circ h) h^{-1} = nu_h[x] * h^{-1}.
    auto image = [&](Elt x) { return g->mul(nu_h[x], hinv); };
    if (all_inner) {
      auto c = conjugator_solving(*g, gens, image);
      if (c) {
        // Generator agreement suffices here only when the value is a
        // homomorphism; confirm on the whole domain.
        bool exact = true;
        for (Elt x = 0; x < ord && exact; ++x)
          exact = g->conj(x, *c) == image(x);
        if (exact) {
          conj[h] = *c;
          continue;
        }
      }
      // Retroactively switch storage: rebuild the perms seen so far.
      all_inner = false;
      if (ord > kMaxTableOrder)
        throw BoundError("regular subgroup twists by non-inner maps above "
                         "the table cap");
      gamma_perms.reserve(ord);
      for (Elt past = 0; past < h; ++past)
        gamma_perms.push_back(iota_perm(*g, conj[past]));
    }
    std::vector<Point> images(ord);
    for (Elt x = 0; x < ord; ++x) images[x] = image(x);
    gamma_perms.emplace_back(std::move(images));
  }
  if (all_inner) return GammaMap::from_inner(g, conj);
  return GammaMap::from_perm_values(g, gamma_perms);
}

}  // namespace holo
