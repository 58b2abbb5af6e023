#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

namespace holo {

using Elt = std::uint32_t;

class CayleyGroup;
using GroupPtr = std::shared_ptr<const CayleyGroup>;

inline constexpr std::size_t kMaxTableOrder = 4096;

// Finite group on {0, ..., order-1} with identity 0 and O(1) multiplication.
// Concrete backends supply mul; everything else is derived. Derived data is
// cached on first use; instances are immutable once built and construction
// is single-threaded.
class CayleyGroup {
 public:
  virtual ~CayleyGroup() = default;

  std::size_t order() const { return order_; }
  virtual Elt mul(Elt x, Elt y) const = 0;
  Elt inv(Elt x) const { return inv_[x]; }

  Elt conj(Elt x, Elt y) const {  // y^-1 x y
    return mul(mul(inv(y), x), y);
  }
  Elt comm(Elt x, Elt y) const {  // x^-1 y^-1 x y
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  Elt power(Elt x, long long e) const;

  std::uint32_t element_order(Elt x) const;
  std::string label(Elt x) const;
  const std::string& provenance() const { return provenance_; }

  // Greedy generating set: scan elements in index order, keep the ones that
  // enlarge the generated subgroup.
  const std::vector<Elt>& generating_set() const;
  const std::vector<Elt>& center_members() const;
  const std::vector<Elt>& derived_members() const;  // sorted
  std::vector<Elt> second_center_members() const;
  bool is_abelian() const;
  bool is_perfect() const;

  // Conjugacy classes, element -> class index; class 0 is the identity's.
  const std::vector<std::uint32_t>& class_of() const;
  std::size_t class_count() const;
  const std::vector<Elt>& class_members(std::uint32_t c) const;

  struct ProductStructure {
    GroupPtr left, right;
    std::vector<Elt> left_embed, right_embed;
    std::vector<std::pair<Elt, Elt>> amalgam_pairs;  // whole graph of the amalgam
    // One decomposition per element: mul(left_embed[left_part[x]],
    // right_embed[right_part[x]]) == x.
    std::vector<Elt> left_part, right_part;
  };
  // Present when this group was built as a (central) product.
  virtual std::optional<ProductStructure> product_structure() const {
    return std::nullopt;
  }

 protected:
  CayleyGroup(std::size_t order, std::string provenance);
  // Must be called at the end of every concrete constructor, once mul works.
  void finish_init();
  virtual Elt inv_impl(Elt x) const;  // default scans for the inverse

  std::vector<std::string> labels_;  // optional, element -> label

 private:
  std::size_t order_;
  std::string provenance_;
  std::vector<Elt> inv_;

  mutable std::vector<std::uint32_t> element_order_;
  mutable std::vector<Elt> generating_set_;
  mutable bool generating_set_done_ = false;
  mutable std::vector<Elt> center_;
  mutable bool center_done_ = false;
  mutable std::vector<Elt> derived_;
  mutable bool derived_done_ = false;
  mutable std::vector<std::uint32_t> class_of_;
  mutable std::vector<std::vector<Elt>> classes_;
};

// Subset of a group's elements forming a subgroup (always contains 0,
// sorted ascending).
struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> members;

  std::size_t order() const { return members.size(); }
  bool contains(Elt x) const;
};

Subgroup subgroup_closure(const GroupPtr& parent, std::vector<Elt> seeds);
Subgroup normal_closure_in(const GroupPtr& parent, std::vector<Elt> seeds);
Subgroup center_subgroup(const GroupPtr& g);
Subgroup derived_subgroup_of(const GroupPtr& g);

// Reindexes a subgroup as a standalone table-backed group.
// index_map: subgroup element index -> parent element.
struct ExtractedGroup {
  GroupPtr group;
  std::vector<Elt> to_parent;
};
ExtractedGroup subgroup_as_group(const Subgroup& s,
                                 std::size_t max_order = kMaxTableOrder);

// Dense table backend. create() validates identity-at-0 and the Latin
// property exhaustively, and associativity exhaustively up to order 256,
// by fixed-seed sampling (1e5 triples) above that.
GroupPtr make_table_group(std::vector<std::uint16_t> table, std::size_t order,
                          std::string provenance,
                          std::vector<std::string> labels = {});

// The abstract group of a regular permutation group: element i is the
// unique permutation mapping 0 to i.
GroupPtr from_regular(const PermGroup& n,
                      std::size_t max_order = kMaxTableOrder);

// Right translation x -> xg and left translation x -> gx.
Perm rho_perm(const CayleyGroup& g, Elt x);
Perm lambda_perm(const CayleyGroup& g, Elt x);
Perm inversion_perm(const CayleyGroup& g);
Perm iota_perm(const CayleyGroup& g, Elt y);  // x -> y^-1 x y
PermGroup rho_rep(const GroupPtr& g);
PermGroup lambda_rep(const GroupPtr& g);

// mul'(x, y) = mul(y, x). Applying it twice returns the original pointer.
GroupPtr opposite(const GroupPtr& g);

struct ProductResult {
  GroupPtr group;
  std::vector<Elt> left_embed;   // left element -> product element
  std::vector<Elt> right_embed;  // right element -> product element
};

ProductResult direct_product(const GroupPtr& left, const GroupPtr& right);

// Central product: identify a central subgroup of the left factor with a
// central subgroup of the right factor along an isomorphism. The amalgam
// is given as pairs (left element, right element) generating the graph of
// the isomorphism; empty means trivial amalgam (plain direct product).
ProductResult central_product(
    const GroupPtr& left, const GroupPtr& right,
    const std::vector<std::pair<Elt, Elt>>& amalgam_pairs);

struct QuotientResult {
  GroupPtr group;
  std::vector<Elt> projection;  // parent element -> quotient element
};

// Quotient by a subgroup of the center.
QuotientResult quotient_central(const GroupPtr& g,
                                const std::vector<Elt>& central_members);

bool same_multiplication(const CayleyGroup& a, const CayleyGroup& b);
std::uint64_t table_hash(const CayleyGroup& g);

}  // namespace holo
