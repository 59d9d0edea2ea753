#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "skewbrace/element_set.hpp"
#include "skewbrace/error.hpp"

namespace skewbrace {

inline constexpr std::size_t kDefaultMaxOrder = 512;

/// A finite group stored as a Cayley table over 0..n-1. Index 0 is the identity.
///
/// Instances only exist in validated form; use GroupTable::validate to build one
/// from raw data.
class GroupTable {
 public:
  /// Checks, in order: square shape and Latin-square rows/columns, identity at
  /// index 0, associativity over all triples, inverses. Throws Error naming the
  /// first axiom that fails.
  static GroupTable validate(const std::vector<std::vector<long long>>& raw);

  /// Builds a table from a closed binary operation on 0..n-1 and validates it.
  template <class Op>
  static GroupTable from_operation(std::size_t n, Op&& op) {
    std::vector<std::vector<long long>> raw(n, std::vector<long long>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        raw[x][y] = static_cast<long long>(op(static_cast<Element>(x), static_cast<Element>(y)));
    return validate(raw);
  }

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element x, Element y) const noexcept { return table_[x * order_ + y]; }
  Element inv(Element x) const noexcept { return inverse_[x]; }

  std::vector<std::vector<Element>> rows() const;

  /// Smallest k >= 1 with x^k = e.
  std::size_t element_order(Element x) const noexcept;
  bool is_abelian() const noexcept;
  std::size_t exponent() const;
  std::size_t center_size() const noexcept;

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.table_ == b.table_; }

 private:
  GroupTable() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Canonical subgroup: strictly increasing member list plus a membership mask.
class Subgroup {
 public:
  /// Checks that `members` is a subgroup of `g` (contains 0, closed under the
  /// product). Throws NotASubgroup otherwise.
  static Subgroup checked(const GroupTable& g, std::vector<Element> members);
  /// Wraps a mask known to be closed under the product.
  static Subgroup from_mask(ElementSet mask);

  std::size_t parent_order() const noexcept { return mask_.universe(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  const ElementSet& mask() const noexcept { return mask_; }
  bool contains(Element x) const noexcept { return mask_.contains(x); }

  /// Canonical order: by size, then lexicographically by member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b);
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  std::vector<Element> members_;
  ElementSet mask_;
};

/// True iff `set` contains the identity and is closed under the product of `g`.
bool is_closed_subset(const GroupTable& g, const ElementSet& set);

/// The subgroup generated by `gens`.
Subgroup generate(const GroupTable& g, std::span<const Element> gens);

std::vector<Subgroup> cyclic_subgroups(const GroupTable& g);

/// Every subgroup of `g`, including {e} and g, in canonical order.
///
/// Starts from the cyclic subgroups and joins each discovered subgroup with
/// every cyclic subgroup it does not already contain, until no new subgroup
/// appears. Every subgroup is the join of its cyclic subgroups, so the
/// fixed point is the whole lattice.
std::vector<Subgroup> subgroups(const GroupTable& g, std::size_t max_order = kDefaultMaxOrder);

/// Greedy generating set: repeatedly adds the highest-order element outside
/// the current span.
std::vector<Element> greedy_generators(const GroupTable& g);

/// Isomorphisms from `from` to `to`, as index arrays, found by backtracking over
/// images of a greedy generating set of `from`. Stops after `limit` results.
std::vector<std::vector<Element>> isomorphisms(const GroupTable& from, const GroupTable& to,
                                               std::size_t limit = SIZE_MAX);

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& from, const GroupTable& to);

/// True iff `map` is a bijective homomorphism between the two tables.
bool is_isomorphism(const GroupTable& from, const GroupTable& to, std::span<const Element> map);
bool is_homomorphism(const GroupTable& from, const GroupTable& to, std::span<const Element> map);

/// Cheap isomorphism-invariant summary.
struct GroupFingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> order_histogram;  // element order -> count
  std::size_t center_size = 0;
  bool abelian = false;
  std::size_t exponent = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const GroupTable& g);

/// Direct product table; element (x, y) is stored at x * |b| + y.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable cyclic_group(std::size_t n);

}  // namespace skewbrace
