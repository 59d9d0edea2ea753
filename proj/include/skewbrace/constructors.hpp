#pragma once

#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

/// Brace whose circle operation is read off a regular subgroup of Hol(G):
/// g o h = r_g(h), with r_g the unique element of `r` sending 0 to g.
/// Throws DegreeMismatch, NotRegular or NotInHolomorph.
SkewBrace brace_from_holomorph_regular(const GroupTable& gstar, const PermGroup& r);

/// An isomorphism a: (G, o) -> Gamma together with its inverse b.
class BraceIso {
 public:
  /// Throws NotAnIsomorphism unless `a` is a bijective homomorphism from the
  /// circle group of `brace` onto `gamma`.
  static BraceIso make(SkewBrace brace, GroupTable gamma, std::vector<Element> a);
  /// Gamma = (G, o) and a = identity.
  static BraceIso identity(const SkewBrace& brace);

  const SkewBrace& brace() const noexcept { return brace_; }
  const GroupTable& gamma() const noexcept { return gamma_; }
  Element a(Element g) const noexcept { return a_[g]; }
  Element b(Element gamma) const noexcept { return b_[gamma]; }
  const std::vector<Element>& a_map() const noexcept { return a_; }

 private:
  BraceIso(SkewBrace brace, GroupTable gamma, std::vector<Element> a, std::vector<Element> b)
      : brace_(std::move(brace)), gamma_(std::move(gamma)), a_(std::move(a)), b_(std::move(b)) {}

  SkewBrace brace_;
  GroupTable gamma_;
  std::vector<Element> a_;
  std::vector<Element> b_;
};

/// { a lambda_star(g) a^-1 : g in G } inside Perm(Gamma). Regular and
/// normalized by lambda(Gamma).
PermGroup alpha_embedding(const BraceIso& iso);

/// { lambda_circ(b(gamma)) } inside Perm(G); a regular subgroup of Hol(G, star).
PermGroup beta_embedding(const BraceIso& iso);

/// Complementary subgroups H, J of G: |H||J| = |G| and H n J = {e}.
class ExactFactorization {
 public:
  /// Throws NotComplementary. Precomputes the unique factorization g = g_l g_r.
  static ExactFactorization make(GroupTable g, Subgroup h, Subgroup j);

  const GroupTable& group() const noexcept { return g_; }
  const Subgroup& left() const noexcept { return h_; }
  const Subgroup& right() const noexcept { return j_; }

  /// (g_l, g_r) with g_l in H, g_r in J, g_l g_r = x.
  std::pair<Element, Element> factorize(Element x) const noexcept { return {left_[x], right_[x]}; }

 private:
  ExactFactorization(GroupTable g, Subgroup h, Subgroup j, std::vector<Element> l, std::vector<Element> r)
      : g_(std::move(g)), h_(std::move(h)), j_(std::move(j)), left_(std::move(l)), right_(std::move(r)) {}

  GroupTable g_;
  Subgroup h_;
  Subgroup j_;
  std::vector<Element> left_;
  std::vector<Element> right_;
};

/// g o h = g_l h g_r, with iso a(g_l g_r) = (g_l, g_r^-1) onto Gamma = H x J.
/// Gamma's element (h_i, j_k) is stored at i * |J| + k, where i and k index
/// the sorted member lists of H and J.
std::pair<SkewBrace, BraceIso> brace_from_exact_factorization(const ExactFactorization& ef);

/// Two homomorphisms Gamma -> G agreeing only at the identity.
class FpfPair {
 public:
  /// Throws OrderMismatch, IndexOutOfRange, NotHomomorphism or NotFixedPointFree.
  static FpfPair make(GroupTable gamma, GroupTable g, std::vector<Element> f_l, std::vector<Element> f_r);

  const GroupTable& gamma() const noexcept { return gamma_; }
  const GroupTable& group() const noexcept { return g_; }
  const std::vector<Element>& f_l() const noexcept { return f_l_; }
  const std::vector<Element>& f_r() const noexcept { return f_r_; }

 private:
  FpfPair(GroupTable gamma, GroupTable g, std::vector<Element> f_l, std::vector<Element> f_r)
      : gamma_(std::move(gamma)), g_(std::move(g)), f_l_(std::move(f_l)), f_r_(std::move(f_r)) {}

  GroupTable gamma_;
  GroupTable g_;
  std::vector<Element> f_l_;
  std::vector<Element> f_r_;
};

/// beta(gamma) = lambda(f_l(gamma)) rho(f_r(gamma)), i.e. x -> f_l x f_r^-1.
PermGroup fpf_beta(const FpfPair& p);

/// Brace induced by beta(Gamma) through brace_from_holomorph_regular.
SkewBrace brace_from_fpf_pair(const FpfPair& p);

}  // namespace skewbrace
