#include "skewbrace/constructors.hpp"

#include <string>

namespace skewbrace {

SkewBrace brace_from_holomorph_regular(const GroupTable& gstar, const PermGroup& r) {
  const std::size_t n = gstar.order();
  if (r.degree() != n)
    throw Error(ErrorCode::DegreeMismatch, "permutation degree " + std::to_string(r.degree()) + ", group order " +
                                               std::to_string(n));
  if (!is_regular(r)) throw Error(ErrorCode::NotRegular, "permutation group is not regular");
  for (const auto& p : r.elements())
    if (!in_holomorph(gstar, p)) throw Error(ErrorCode::NotInHolomorph, "element does not normalize lambda(G)");

  // r_g is the unique element sending 0 to g.
  std::vector<const Permutation*> by_target(n, nullptr);
  for (const auto& p : r.elements()) by_target[p(0)] = &p;
  auto circ = GroupTable::from_operation(n, [&](Element g, Element h) { return (*by_target[g])(h); });
  return SkewBrace::make(gstar, std::move(circ));
}

BraceIso BraceIso::make(SkewBrace brace, GroupTable gamma, std::vector<Element> a) {
  if (!is_isomorphism(brace.circ(), gamma, a))
    throw Error(ErrorCode::NotAnIsomorphism, "a is not an isomorphism from the circle group onto Gamma");
  std::vector<Element> b(a.size());
  for (Element g = 0; g < a.size(); ++g) b[a[g]] = g;
  return BraceIso(std::move(brace), std::move(gamma), std::move(a), std::move(b));
}

BraceIso BraceIso::identity(const SkewBrace& brace) {
  std::vector<Element> a(brace.order());
  for (Element g = 0; g < a.size(); ++g) a[g] = g;
  return make(brace, brace.circ(), std::move(a));
}

PermGroup alpha_embedding(const BraceIso& iso) {
  const auto& star = iso.brace().star();
  const std::size_t n = star.order();
  std::vector<Permutation> el;
  el.reserve(n);
  for (Element g = 0; g < n; ++g) {
    std::vector<Element> im(n);
    for (Element gamma = 0; gamma < n; ++gamma) im[gamma] = iso.a(star.mul(g, iso.b(gamma)));
    el.emplace_back(std::move(im));
  }
  return PermGroup::from_trusted(n, std::move(el));
}

PermGroup beta_embedding(const BraceIso& iso) {
  const auto& circ = iso.brace().circ();
  const std::size_t n = circ.order();
  std::vector<Permutation> el;
  el.reserve(n);
  for (Element gamma = 0; gamma < n; ++gamma) el.push_back(left_translation(circ, iso.b(gamma)));
  return PermGroup::from_trusted(n, std::move(el));
}

ExactFactorization ExactFactorization::make(GroupTable g, Subgroup h, Subgroup j) {
  const std::size_t n = g.order();
  if (h.parent_order() != n || j.parent_order() != n)
    throw Error(ErrorCode::NotComplementary, "subgroups belong to a carrier of different size");
  if (!is_closed_subset(g, h.mask()) || !is_closed_subset(g, j.mask()))
    throw Error(ErrorCode::NotASubgroup, "H or J is not a subgroup of G");
  if (h.size() * j.size() != n)
    throw Error(ErrorCode::NotComplementary, "|H||J| = " + std::to_string(h.size() * j.size()) + " != |G| = " +
                                                 std::to_string(n));
  if ((h.mask() & j.mask()).count() != 1) throw Error(ErrorCode::NotComplementary, "H and J intersect nontrivially");

  std::vector<Element> left(n), right(n);
  for (Element hl : h.members())
    for (Element jr : j.members()) {
      const Element x = g.mul(hl, jr);
      left[x] = hl;
      right[x] = jr;
    }
  return ExactFactorization(std::move(g), std::move(h), std::move(j), std::move(left), std::move(right));
}

std::pair<SkewBrace, BraceIso> brace_from_exact_factorization(const ExactFactorization& ef) {
  const auto& g = ef.group();
  const std::size_t n = g.order();
  auto circ = GroupTable::from_operation(n, [&](Element x, Element y) {
    const auto [xl, xr] = ef.factorize(x);
    return g.mul(g.mul(xl, y), xr);
  });
  auto brace = SkewBrace::make(g, std::move(circ));

  const auto& hm = ef.left().members();
  const auto& jm = ef.right().members();
  std::vector<Element> hpos(n), jpos(n);
  for (Element i = 0; i < hm.size(); ++i) hpos[hm[i]] = i;
  for (Element k = 0; k < jm.size(); ++k) jpos[jm[k]] = k;
  const auto nj = static_cast<Element>(jm.size());
  auto gamma = GroupTable::from_operation(n, [&](Element x, Element y) {
    const Element hprod = g.mul(hm[x / nj], hm[y / nj]);
    const Element jprod = g.mul(jm[x % nj], jm[y % nj]);
    return hpos[hprod] * nj + jpos[jprod];
  });

  std::vector<Element> a(n);
  for (Element x = 0; x < n; ++x) {
    const auto [xl, xr] = ef.factorize(x);
    a[x] = hpos[xl] * nj + jpos[g.inv(xr)];
  }
  auto iso = BraceIso::make(brace, std::move(gamma), std::move(a));
  return {std::move(brace), std::move(iso)};
}

FpfPair FpfPair::make(GroupTable gamma, GroupTable g, std::vector<Element> f_l, std::vector<Element> f_r) {
  const std::size_t n = gamma.order();
  if (g.order() != n)
    throw Error(ErrorCode::OrderMismatch, "|Gamma| = " + std::to_string(n) + ", |G| = " + std::to_string(g.order()));
  if (f_l.size() != n || f_r.size() != n) throw Error(ErrorCode::IndexOutOfRange, "homomorphism arrays must have length |Gamma|");
  for (std::size_t i = 0; i < n; ++i)
    if (f_l[i] >= n || f_r[i] >= n) throw Error(ErrorCode::IndexOutOfRange, "image out of range at " + std::to_string(i));
  if (!is_homomorphism(gamma, g, f_l)) throw Error(ErrorCode::NotHomomorphism, "f_l");
  if (!is_homomorphism(gamma, g, f_r)) throw Error(ErrorCode::NotHomomorphism, "f_r");
  for (Element x = 1; x < n; ++x)
    if (f_l[x] == f_r[x]) throw Error(ErrorCode::NotFixedPointFree, "f_l and f_r agree at " + std::to_string(x));
  return FpfPair(std::move(gamma), std::move(g), std::move(f_l), std::move(f_r));
}

PermGroup fpf_beta(const FpfPair& p) {
  const auto& g = p.group();
  const std::size_t n = g.order();
  std::vector<Permutation> el;
  el.reserve(n);
  for (Element gamma = 0; gamma < n; ++gamma) el.push_back(left_translation(g, p.f_l()[gamma]) * right_translation(g, p.f_r()[gamma]));
  return PermGroup::from_trusted(n, std::move(el));
}

SkewBrace brace_from_fpf_pair(const FpfPair& p) { return brace_from_holomorph_regular(p.group(), fpf_beta(p)); }

}  // namespace skewbrace
