#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skewbrace/group.hpp"
#include "skewbrace/permutation.hpp"

namespace skewbrace {

/// A skew left brace (G, star, circ) on the carrier 0..n-1.
///
/// `star` is the additive group and `circ` the circle group; both share the
/// identity 0. The brace axiom
///
///   g o (h * k) = (g o h) * g^-1 * (g o k)
///
/// is verified over all triples on construction. Inverses g^-1 always refer to
/// the star group unless a name says otherwise.
class SkewBrace {
 public:
  /// Throws OrderMismatch, IdentityMismatch or BraceAxiomFailure.
  static SkewBrace make(GroupTable star, GroupTable circ);

  std::size_t order() const noexcept { return star_.order(); }
  const GroupTable& star() const noexcept { return star_; }
  const GroupTable& circ() const noexcept { return circ_; }

  /// L_g(x) = g^-1 * (g o x).
  Element lambda(Element g, Element x) const noexcept {
    return star_.mul(star_.inv(g), circ_.mul(g, x));
  }

  friend bool operator==(const SkewBrace&, const SkewBrace&) = default;

 private:
  SkewBrace(GroupTable star, GroupTable circ) : star_(std::move(star)), circ_(std::move(circ)) {}

  GroupTable star_;
  GroupTable circ_;
};

/// The trivial brace g o h = g * h.
SkewBrace trivial_brace(const GroupTable& g);

/// L_g as a permutation; an automorphism of the star group.
Permutation brace_lambda(const SkewBrace& b, Element g);

/// (g o s) * g^-1 in s for all g in G, s in `s`. Throws NotAStarSubgroup if
/// `s` is not a subgroup of the star group.
bool is_circ_stable(const SkewBrace& b, const Subgroup& s);

/// g^-1 * (g o s) in s for all g in G, s in `s`.
bool is_left_ideal(const SkewBrace& b, const Subgroup& s);

/// h * g^-1 * (g o s) * h^-1 in `subset` for all g, h in G and s in `subset`.
/// Accepts arbitrary subsets. Throws EmptySubset.
bool satisfies_gv_condition(const SkewBrace& b, std::span<const Element> subset);

std::vector<Subgroup> circ_stable_subgroups(const SkewBrace& b,
                                            std::size_t max_order = kDefaultMaxOrder);
std::vector<Subgroup> left_ideals(const SkewBrace& b, std::size_t max_order = kDefaultMaxOrder);

/// Exact non-negative fraction kept in lowest terms.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio reduced(std::uint64_t num, std::uint64_t den);
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct GaloisReport {
  std::size_t count_circ_stable = 0;
  std::size_t count_circ_subgroups = 0;
  Ratio ratio;
  std::vector<Subgroup> stable_list;
};

/// Stable subgroups against the full subgroup lattice of the circle group.
GaloisReport galois_report(const SkewBrace& b, std::size_t max_order = kDefaultMaxOrder);

}  // namespace skewbrace
