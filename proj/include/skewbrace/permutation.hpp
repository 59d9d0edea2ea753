#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

/// A bijection of 0..degree-1. Composition follows function notation:
/// (f * g)(x) = f(g(x)).
class Permutation {
 public:
  /// Throws NotAPermutation if `images` is not a bijection of 0..n-1.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const noexcept { return images_[x]; }
  const std::vector<Element>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool has_fixed_point() const noexcept;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Element> images) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

/// A finite set of permutations of one degree, closed under composition.
/// Elements are kept sorted lexicographically by image array, so the identity
/// is always first.
class PermGroup {
 public:
  /// Validates closure; throws DegreeMismatch or NotClosed.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);
  static PermGroup generated_by(std::size_t degree, std::span<const Permutation> gens);
  /// Sorts and deduplicates without the closure check. Callers guarantee that
  /// `elements` is a group.
  static PermGroup from_trusted(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;
  /// Position of p in elements(), or size() if absent.
  std::size_t index_of(const Permutation& p) const;

  /// Cayley table indexed by position in elements(); identity lands at 0.
  GroupTable cayley_table() const;

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> sorted)
      : degree_(degree), elements_(std::move(sorted)) {}

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// x -> g * x.
Permutation left_translation(const GroupTable& g, Element x);
/// x -> x * g^-1, so that g -> right_translation(g) is a homomorphism.
Permutation right_translation(const GroupTable& g, Element x);

PermGroup left_regular(const GroupTable& g);
PermGroup right_regular(const GroupTable& g);

bool is_automorphism(const GroupTable& g, const Permutation& p);

/// Table-preserving bijections fixing 0.
PermGroup automorphism_group(const GroupTable& g, std::size_t max_order = kDefaultMaxOrder);

inline constexpr std::size_t kMaxHolomorphSize = std::size_t{1} << 20;

/// { h -> g * theta(h) : g in G, theta in Aut(G) }.
PermGroup holomorph(const GroupTable& g, std::size_t max_order = kDefaultMaxOrder);

/// Membership in Hol(G) without building it: p is in Hol(G) iff
/// lambda(p(0))^-1 * p is an automorphism.
bool in_holomorph(const GroupTable& g, const Permutation& p);

/// |pg| = degree and only the identity has a fixed point.
bool is_regular(const PermGroup& pg);

/// a t a^-1 lies in target for every a in actor, t in target.
bool normalized_by(const PermGroup& target, const PermGroup& actor);

/// Subgroups of `target` (as permutation groups) that `actor` normalizes.
/// Subgroups are found on the Cayley table of `target`, then mapped back to
/// permutations.
std::vector<PermGroup> normalized_subgroups(const PermGroup& target, const PermGroup& actor,
                                            std::size_t max_order = kDefaultMaxOrder);

}  // namespace skewbrace
