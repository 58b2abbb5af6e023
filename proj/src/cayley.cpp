#include "holo/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "holo/errors.hpp"

namespace holo {

CayleyGroup::CayleyGroup(std::size_t order, std::string provenance)
    : order_(order), provenance_(std::move(provenance)) {
  if (order == 0) throw Error("group order must be positive");
}

void CayleyGroup::finish_init() {
  inv_.resize(order_);
  for (Elt x = 0; x < order_; ++x) inv_[x] = inv_impl(x);
  if (inv_[0] != 0) throw InvariantError("identity must be self-inverse");
}

Elt CayleyGroup::inv_impl(Elt x) const {
  for (Elt y = 0; y < order_; ++y)
    if (mul(x, y) == 0) return y;
  throw InvariantError("element without inverse");
}

Elt CayleyGroup::power(Elt x, long long e) const {
  Elt base = x;
  if (e < 0) {
    base = inv(x);
    e = -e;
  }
  Elt acc = 0;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint32_t CayleyGroup::element_order(Elt x) const {
  if (element_order_.empty()) {
    element_order_.assign(order_, 0);
    for (Elt e = 0; e < order_; ++e) {
      if (element_order_[e]) continue;
      // Walk the cyclic subgroup once; every power of e gets its order.
      std::vector<Elt> cyc;
      Elt c = e;
      while (c != 0) {
        cyc.push_back(c);
        c = mul(c, e);
      }
      std::uint32_t n = static_cast<std::uint32_t>(cyc.size() + 1);
      element_order_[0] = 1;
      for (std::size_t k = 1; k <= cyc.size(); ++k) {
        std::uint32_t g = std::gcd(static_cast<std::uint32_t>(k), n);
        element_order_[cyc[k - 1]] = n / g;
      }
    }
  }
  return element_order_[x];
}

std::string CayleyGroup::label(Elt x) const {
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x);
}

namespace {

// Closure of {0} ∪ seeds under right multiplication by the seeds.
std::vector<Elt> closure_members(const CayleyGroup& g,
                                 const std::vector<Elt>& seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elt> out;
  in[0] = true;
  out.push_back(0);
  for (Elt s : seeds)
    if (!in[s]) {
      in[s] = true;
      out.push_back(s);
    }
  for (std::size_t pos = 0; pos < out.size(); ++pos)
    for (Elt s : seeds) {
      Elt p = g.mul(out[pos], s);
      if (!in[p]) {
        in[p] = true;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Elt>& CayleyGroup::generating_set() const {
  if (!generating_set_done_) {
    std::vector<Elt> gens;
    std::vector<Elt> closed = {0};
    for (Elt x = 1; x < order_; ++x) {
      if (std::binary_search(closed.begin(), closed.end(), x)) continue;
      gens.push_back(x);
      closed = closure_members(*this, gens);
      if (closed.size() == order_) break;
    }
    generating_set_ = std::move(gens);
    generating_set_done_ = true;
  }
  return generating_set_;
}

const std::vector<Elt>& CayleyGroup::center_members() const {
  if (!center_done_) {
    const auto& gens = generating_set();
    for (Elt x = 0; x < order_; ++x) {
      bool central = true;
      for (Elt s : gens)
        if (mul(x, s) != mul(s, x)) {
          central = false;
          break;
        }
      if (central) center_.push_back(x);
    }
    center_done_ = true;
  }
  return center_;
}

const std::vector<Elt>& CayleyGroup::derived_members() const {
  if (!derived_done_) {
    const auto& gens = generating_set();
    std::vector<Elt> seeds;
    for (Elt a : gens)
      for (Elt b : gens) {
        Elt c = comm(a, b);
        if (c != 0) seeds.push_back(c);
      }
    // Normal closure of the generator commutators.
    std::vector<Elt> members = closure_members(*this, seeds);
    for (;;) {
      std::vector<Elt> extra;
      for (Elt m : members)
        for (Elt s : gens) {
          Elt c = conj(m, s);
          if (!std::binary_search(members.begin(), members.end(), c))
            extra.push_back(c);
        }
      if (extra.empty()) break;
      for (Elt m : members) extra.push_back(m);
      members = closure_members(*this, extra);
    }
    derived_ = std::move(members);
    derived_done_ = true;
  }
  return derived_;
}

std::vector<Elt> CayleyGroup::second_center_members() const {
  // x with [x, s] central for every generator s: since [x, gh] is a product
  // of conjugates of [x, g] and [x, h], the condition extends to the whole
  // group when the commutators land in the center.
  const auto& gens = generating_set();
  const auto& z = center_members();
  std::vector<Elt> out;
  for (Elt x = 0; x < order_; ++x) {
    bool ok = true;
    for (Elt s : gens)
      if (!std::binary_search(z.begin(), z.end(), comm(x, s))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

bool CayleyGroup::is_abelian() const {
  return center_members().size() == order_;
}

bool CayleyGroup::is_perfect() const {
  return derived_members().size() == order_;
}

const std::vector<std::uint32_t>& CayleyGroup::class_of() const {
  if (class_of_.empty()) {
    class_of_.assign(order_, UINT32_MAX);
    const auto& gens = generating_set();
    for (Elt x = 0; x < order_; ++x) {
      if (class_of_[x] != UINT32_MAX) continue;
      std::uint32_t id = static_cast<std::uint32_t>(classes_.size());
      std::vector<Elt> cls = {x};
      class_of_[x] = id;
      for (std::size_t pos = 0; pos < cls.size(); ++pos)
        for (Elt s : gens) {
          Elt c = conj(cls[pos], s);
          if (class_of_[c] == UINT32_MAX) {
            class_of_[c] = id;
            cls.push_back(c);
          }
        }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  }
  return class_of_;
}

std::size_t CayleyGroup::class_count() const {
  class_of();
  return classes_.size();
}

const std::vector<Elt>& CayleyGroup::class_members(std::uint32_t c) const {
  class_of();
  return classes_[c];
}

bool Subgroup::contains(Elt x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup subgroup_closure(const GroupPtr& parent, std::vector<Elt> seeds) {
  return Subgroup{parent, closure_members(*parent, seeds)};
}

Subgroup normal_closure_in(const GroupPtr& parent, std::vector<Elt> seeds) {
  const auto& gens = parent->generating_set();
  std::vector<Elt> members = closure_members(*parent, seeds);
  for (;;) {
    std::vector<Elt> extra;
    for (Elt m : members)
      for (Elt s : gens) {
        Elt c = parent->conj(m, s);
        if (!std::binary_search(members.begin(), members.end(), c))
          extra.push_back(c);
      }
    if (extra.empty()) break;
    for (Elt m : members) extra.push_back(m);
    members = closure_members(*parent, extra);
  }
  return Subgroup{parent, std::move(members)};
}

Subgroup center_subgroup(const GroupPtr& g) {
  return Subgroup{g, g->center_members()};
}

Subgroup derived_subgroup_of(const GroupPtr& g) {
  return Subgroup{g, g->derived_members()};
}

namespace {

class TableGroup final : public CayleyGroup {
 public:
  TableGroup(std::vector<std::uint16_t> table, std::size_t order,
             std::string provenance, std::vector<std::string> labels)
      : CayleyGroup(order, std::move(provenance)), table_(std::move(table)) {
    labels_ = std::move(labels);
    finish_init();
  }

  Elt mul(Elt x, Elt y) const override {
    return table_[static_cast<std::size_t>(x) * order() + y];
  }

 protected:
  Elt inv_impl(Elt x) const override {
    const std::size_t n = order();
    const std::uint16_t* row = table_.data() + static_cast<std::size_t>(x) * n;
    for (std::size_t y = 0; y < n; ++y)
      if (row[y] == 0) return static_cast<Elt>(y);
    throw InvariantError("element without inverse");
  }

 private:
  std::vector<std::uint16_t> table_;
};

void validate_table(const std::vector<std::uint16_t>& t, std::size_t n) {
  if (n > 0xFFFF) throw BoundError("table order exceeds index width");
  if (t.size() != n * n) throw ParseError("table size does not match order");
  for (std::uint16_t v : t)
    if (v >= n) throw ParseError("table entry out of range");
  for (std::size_t x = 0; x < n; ++x) {
    if (t[x] != x || t[x * n] != x)
      throw ParseError("element 0 is not an identity");
  }
  std::vector<bool> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[t[x * n + y]]) throw ParseError("row is not a permutation");
      seen[t[x * n + y]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[t[y * n + x]]) throw ParseError("column is not a permutation");
      seen[t[y * n + x]] = true;
    }
  }
  auto at = [&](std::size_t x, std::size_t y) { return t[x * n + y]; };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw ParseError("multiplication is not associative");
  } else {
    std::mt19937 rng(9001);
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      std::size_t a = d(rng), b = d(rng), c = d(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw ParseError("multiplication is not associative");
    }
  }
}

}  // namespace

GroupPtr make_table_group(std::vector<std::uint16_t> table, std::size_t order,
                          std::string provenance,
                          std::vector<std::string> labels) {
  validate_table(table, order);
  return std::make_shared<TableGroup>(std::move(table), order,
                                      std::move(provenance),
                                      std::move(labels));
}

ExtractedGroup subgroup_as_group(const Subgroup& s, std::size_t max_order) {
  const std::size_t m = s.members.size();
  if (m > max_order) throw BoundError("subgroup exceeds table bound");
  if (s.members.empty() || s.members[0] != 0)
    throw InvariantError("subgroup must contain the identity");
  std::vector<std::uint32_t> idx(s.parent->order(), UINT32_MAX);
  for (std::size_t i = 0; i < m; ++i) idx[s.members[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::uint16_t> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = s.parent->label(s.members[i]);
    for (std::size_t j = 0; j < m; ++j) {
      Elt p = s.parent->mul(s.members[i], s.members[j]);
      if (idx[p] == UINT32_MAX)
        throw InvariantError("member set is not multiplication closed");
      table[i * m + j] = static_cast<std::uint16_t>(idx[p]);
    }
  }
  ExtractedGroup out;
  out.group = make_table_group(std::move(table), m,
                               "subgroup(" + s.parent->provenance() + ")",
                               std::move(labels));
  out.to_parent = s.members;
  return out;
}

GroupPtr from_regular(const PermGroup& n, std::size_t max_order) {
  if (!n.is_regular()) throw Error("group is not regular");
  const std::size_t deg = n.degree();
  if (deg > max_order) throw BoundError("regular degree exceeds table bound");
  std::vector<Perm> by_image(deg);
  for (const Perm& p : n.elements(max_order)) by_image[p[0]] = p;
  std::vector<std::uint16_t> table(deg * deg);
  std::vector<std::string> labels(deg);
  for (std::size_t j = 0; j < deg; ++j) {
    labels[j] = by_image[j].to_cycles();
    for (std::size_t i = 0; i < deg; ++i)
      table[i * deg + j] = static_cast<std::uint16_t>(by_image[j][static_cast<Point>(i)]);
  }
  return make_table_group(std::move(table), deg, "regular", std::move(labels));
}

Perm rho_perm(const CayleyGroup& g, Elt x) {
  std::vector<Point> img(g.order());
  for (Elt y = 0; y < g.order(); ++y) img[y] = g.mul(y, x);
  return Perm(std::move(img));
}

Perm lambda_perm(const CayleyGroup& g, Elt x) {
  std::vector<Point> img(g.order());
  for (Elt y = 0; y < g.order(); ++y) img[y] = g.mul(x, y);
  return Perm(std::move(img));
}

Perm inversion_perm(const CayleyGroup& g) {
  std::vector<Point> img(g.order());
  for (Elt y = 0; y < g.order(); ++y) img[y] = g.inv(y);
  return Perm(std::move(img));
}

Perm iota_perm(const CayleyGroup& g, Elt y) {
  std::vector<Point> img(g.order());
  for (Elt x = 0; x < g.order(); ++x) img[x] = g.conj(x, y);
  return Perm(std::move(img));
}

PermGroup rho_rep(const GroupPtr& g) {
  std::vector<Perm> gens;
  for (Elt x : g->generating_set()) gens.push_back(rho_perm(*g, x));
  return PermGroup::with_known_order(g->order(), std::move(gens), g->order());
}

PermGroup lambda_rep(const GroupPtr& g) {
  std::vector<Perm> gens;
  for (Elt x : g->generating_set()) gens.push_back(lambda_perm(*g, x));
  return PermGroup::with_known_order(g->order(), std::move(gens), g->order());
}

namespace {

class OppositeGroup final : public CayleyGroup {
 public:
  explicit OppositeGroup(GroupPtr base)
      : CayleyGroup(base->order(), "opposite(" + base->provenance() + ")"),
        base_(std::move(base)) {
    finish_init();
  }

  Elt mul(Elt x, Elt y) const override { return base_->mul(y, x); }
  const GroupPtr& base() const { return base_; }

 protected:
  Elt inv_impl(Elt x) const override { return base_->inv(x); }

 private:
  GroupPtr base_;
};

}  // namespace

GroupPtr opposite(const GroupPtr& g) {
  if (auto op = std::dynamic_pointer_cast<const OppositeGroup>(g))
    return op->base();
  return std::make_shared<OppositeGroup>(g);
}

namespace {

// Central product backend. Elements are normalized pairs (t, r) with t a
// transversal representative of the amalgam domain in the left factor and
// r any right factor element; index = t_index * |right| + r.
class ProductGroup final : public CayleyGroup {
 public:
  ProductGroup(GroupPtr left, GroupPtr right, std::vector<Elt> dom,
               std::vector<Elt> dom_image, std::string provenance)
      : CayleyGroup(left->order() / dom.size() * right->order(),
                    std::move(provenance)),
        left_(std::move(left)),
        right_(std::move(right)),
        nr_(right_->order()) {
    const std::size_t nl = left_->order();
    t_index_of_left_.assign(nl, UINT32_MAX);
    amalg_right_of_left_.assign(nl, 0);
    for (Elt l = 0; l < nl; ++l) {
      if (t_index_of_left_[l] != UINT32_MAX) continue;
      std::uint32_t ti = static_cast<std::uint32_t>(transversal_.size());
      transversal_.push_back(l);
      for (std::size_t k = 0; k < dom.size(); ++k) {
        Elt lz = left_->mul(l, dom[k]);
        if (t_index_of_left_[lz] != UINT32_MAX)
          throw InvariantError("amalgam domain cosets overlap");
        t_index_of_left_[lz] = ti;
        amalg_right_of_left_[lz] = dom_image[k];
      }
    }
    if (transversal_.size() * dom.size() != nl)
      throw InvariantError("amalgam domain does not partition the left factor");
    dom_ = std::move(dom);
    dom_image_ = std::move(dom_image);
    if (order() <= kMaxTableOrder) {
      labels_.resize(order());
      for (Elt x = 0; x < order(); ++x)
        labels_[x] = "(" + left_->label(transversal_[x / nr_]) + "," +
                     right_->label(static_cast<Elt>(x % nr_)) + ")";
    }
    finish_init();
  }

  Elt mul(Elt x, Elt y) const override {
    Elt t1 = transversal_[x / nr_];
    Elt r1 = static_cast<Elt>(x % nr_);
    Elt t2 = transversal_[y / nr_];
    Elt r2 = static_cast<Elt>(y % nr_);
    Elt l = left_->mul(t1, t2);
    Elt r = right_->mul(right_->mul(r1, r2), amalg_right_of_left_[l]);
    return t_index_of_left_[l] * nr_ + r;
  }

  std::optional<ProductStructure> product_structure() const override {
    ProductStructure s;
    s.left = left_;
    s.right = right_;
    s.left_embed.resize(left_->order());
    for (Elt l = 0; l < left_->order(); ++l)
      s.left_embed[l] = t_index_of_left_[l] * nr_ + amalg_right_of_left_[l];
    s.right_embed.resize(nr_);
    for (Elt r = 0; r < nr_; ++r) s.right_embed[r] = r;
    for (std::size_t k = 0; k < dom_.size(); ++k)
      s.amalgam_pairs.emplace_back(dom_[k], dom_image_[k]);
    s.left_part.resize(order());
    s.right_part.resize(order());
    for (Elt x = 0; x < order(); ++x) {
      s.left_part[x] = transversal_[x / nr_];
      s.right_part[x] = static_cast<Elt>(x % nr_);
    }
    return s;
  }

 protected:
  Elt inv_impl(Elt x) const override {
    Elt t1 = transversal_[x / nr_];
    Elt r1 = static_cast<Elt>(x % nr_);
    Elt l = left_->inv(t1);
    Elt r = right_->mul(right_->inv(r1), amalg_right_of_left_[l]);
    return t_index_of_left_[l] * nr_ + r;
  }

 private:
  GroupPtr left_, right_;
  std::size_t nr_;
  std::vector<Elt> transversal_;
  std::vector<std::uint32_t> t_index_of_left_;
  std::vector<Elt> amalg_right_of_left_;
  std::vector<Elt> dom_, dom_image_;
};

bool is_central_in(const CayleyGroup& g, Elt x) {
  const auto& z = g.center_members();
  return std::binary_search(z.begin(), z.end(), x);
}

}  // namespace

ProductResult central_product(
    const GroupPtr& left, const GroupPtr& right,
    const std::vector<std::pair<Elt, Elt>>& amalgam_pairs) {
  // Close the amalgam pairs into the full graph of an isomorphism between
  // a central subgroup of the left factor and one of the right factor.
  std::vector<Elt> dom = {0};
  std::vector<Elt> img = {0};
  auto find_dom = [&](Elt l) -> std::size_t {
    for (std::size_t i = 0; i < dom.size(); ++i)
      if (dom[i] == l) return i;
    return SIZE_MAX;
  };
  for (auto [l, r] : amalgam_pairs) {
    if (l >= left->order() || r >= right->order())
      throw ParseError("amalgam pair out of range");
    std::size_t at = find_dom(l);
    if (at == SIZE_MAX) {
      dom.push_back(l);
      img.push_back(r);
    } else if (img[at] != r) {
      throw ParseError("amalgam is not a well-defined map");
    }
  }
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      Elt l = left->mul(dom[i], dom[j]);
      Elt r = right->mul(img[i], img[j]);
      std::size_t at = find_dom(l);
      if (at == SIZE_MAX) {
        dom.push_back(l);
        img.push_back(r);
        // restart scan so the closure is complete
        i = 0;
        j = SIZE_MAX;
        continue;
      }
      if (img[at] != r) throw ParseError("amalgam is not a homomorphism");
    }
  // Injectivity and centrality.
  {
    std::vector<Elt> sorted_img = img;
    std::sort(sorted_img.begin(), sorted_img.end());
    if (std::adjacent_find(sorted_img.begin(), sorted_img.end()) !=
        sorted_img.end())
      throw ParseError("amalgam is not injective");
  }
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (!is_central_in(*left, dom[i]))
      throw ParseError("amalgam domain is not central in the left factor");
    if (!is_central_in(*right, img[i]))
      throw ParseError("amalgam image is not central in the right factor");
  }
  // Deterministic order of the domain.
  std::vector<std::size_t> perm(dom.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return dom[a] < dom[b]; });
  std::vector<Elt> sdom(dom.size()), simg(dom.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    sdom[i] = dom[perm[i]];
    simg[i] = img[perm[i]];
  }
  std::string tag = sdom.size() == 1 ? "direct" : "central";
  std::string prov =
      tag + "(" + left->provenance() + "," + right->provenance() + ")";
  auto grp = std::make_shared<ProductGroup>(left, right, std::move(sdom),
                                            std::move(simg), std::move(prov));
  ProductResult out;
  out.group = grp;
  auto s = grp->product_structure();
  out.left_embed = s->left_embed;
  out.right_embed = s->right_embed;
  return out;
}

ProductResult direct_product(const GroupPtr& left, const GroupPtr& right) {
  return central_product(left, right, {});
}

namespace {

class QuotientGroup final : public CayleyGroup {
 public:
  QuotientGroup(GroupPtr parent, std::vector<Elt> reps,
                std::vector<std::uint32_t> coset_of)
      : CayleyGroup(reps.size(),
                    "quotient(" + parent->provenance() + ")"),
        parent_(std::move(parent)),
        reps_(std::move(reps)),
        coset_of_(std::move(coset_of)) {
    labels_.resize(order());
    for (Elt c = 0; c < order(); ++c)
      labels_[c] = "[" + parent_->label(reps_[c]) + "]";
    finish_init();
  }

  Elt mul(Elt x, Elt y) const override {
    return coset_of_[parent_->mul(reps_[x], reps_[y])];
  }

 protected:
  Elt inv_impl(Elt x) const override {
    return coset_of_[parent_->inv(reps_[x])];
  }

 private:
  GroupPtr parent_;
  std::vector<Elt> reps_;
  std::vector<std::uint32_t> coset_of_;
};

}  // namespace

QuotientResult quotient_central(const GroupPtr& g,
                                const std::vector<Elt>& central_members) {
  std::vector<Elt> n = central_members;
  std::sort(n.begin(), n.end());
  if (n.empty() || n[0] != 0) throw ParseError("kernel must contain 0");
  for (Elt z : n)
    if (!is_central_in(*g, z)) throw ParseError("kernel is not central");
  {
    auto closed = closure_members(*g, n);
    if (closed != n) throw ParseError("kernel is not a subgroup");
  }
  std::vector<std::uint32_t> coset_of(g->order(), UINT32_MAX);
  std::vector<Elt> reps;
  for (Elt x = 0; x < g->order(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elt z : n) coset_of[g->mul(x, z)] = c;
  }
  QuotientResult out;
  out.projection = std::vector<Elt>(coset_of.begin(), coset_of.end());
  out.group = std::make_shared<QuotientGroup>(g, std::move(reps),
                                              std::move(coset_of));
  return out;
}

bool same_multiplication(const CayleyGroup& a, const CayleyGroup& b) {
  if (a.order() != b.order()) return false;
  for (Elt x = 0; x < a.order(); ++x)
    for (Elt y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

std::uint64_t table_hash(const CayleyGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < g.order(); ++y) {
      h ^= g.mul(x, y);
      h *= 1099511628211ull;
    }
  return h;
}

}  // namespace holo
