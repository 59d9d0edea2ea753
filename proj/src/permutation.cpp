#include "skewbrace/permutation.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace skewbrace {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  ElementSet seen(images_.size());
  for (Element x : images_)
    if (x >= images_.size() || !seen.insert(x))
      throw Error(ErrorCode::NotAPermutation, "image array is not a bijection of 0.." +
                                                  std::to_string(images_.size()) + "-1");
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Element>(i);
  return Permutation(Unchecked{}, std::move(im));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::has_fixed_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return true;
  return false;
}

Permutation Permutation::inverse() const {
  std::vector<Element> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<Element>(i);
  return Permutation(Unchecked{}, std::move(im));
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  std::vector<Element> im(g.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = f.images_[g.images_[i]];
  return Permutation(Permutation::Unchecked{}, std::move(im));
}

PermGroup PermGroup::from_trusted(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return PermGroup(degree, std::move(elements));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  for (const auto& p : elements)
    if (p.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "element of degree " + std::to_string(p.degree()));
  auto pg = from_trusted(degree, std::move(elements));
  if (pg.elements_.empty() || !pg.elements_.front().is_identity())
    throw Error(ErrorCode::NotClosed, "identity permutation missing");
  for (const auto& a : pg.elements_)
    for (const auto& b : pg.elements_)
      if (!pg.contains(a * b)) throw Error(ErrorCode::NotClosed, "set is not closed under composition");
  return pg;
}

PermGroup PermGroup::generated_by(std::size_t degree, std::span<const Permutation> gens) {
  for (const auto& p : gens)
    if (p.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "generator of degree " + std::to_string(p.degree()));
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  std::vector<Permutation> next;
  while (!frontier.empty()) {
    next.clear();
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        auto y = x * s;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier.swap(next);
  }
  return PermGroup(degree, std::vector<Permutation>(seen.begin(), seen.end()));
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::contains(const Permutation& p) const { return index_of(p) != elements_.size(); }

GroupTable PermGroup::cayley_table() const {
  return GroupTable::from_operation(elements_.size(), [this](Element x, Element y) {
    return static_cast<Element>(index_of(elements_[x] * elements_[y]));
  });
}

Permutation left_translation(const GroupTable& g, Element x) {
  std::vector<Element> im(g.order());
  for (Element h = 0; h < g.order(); ++h) im[h] = g.mul(x, h);
  return Permutation(std::move(im));
}

Permutation right_translation(const GroupTable& g, Element x) {
  const Element xi = g.inv(x);
  std::vector<Element> im(g.order());
  for (Element h = 0; h < g.order(); ++h) im[h] = g.mul(h, xi);
  return Permutation(std::move(im));
}

PermGroup left_regular(const GroupTable& g) {
  std::vector<Permutation> el;
  for (Element x = 0; x < g.order(); ++x) el.push_back(left_translation(g, x));
  return PermGroup::from_trusted(g.order(), std::move(el));
}

PermGroup right_regular(const GroupTable& g) {
  std::vector<Permutation> el;
  for (Element x = 0; x < g.order(); ++x) el.push_back(right_translation(g, x));
  return PermGroup::from_trusted(g.order(), std::move(el));
}

bool is_automorphism(const GroupTable& g, const Permutation& p) {
  return p.degree() == g.order() && is_homomorphism(g, g, p.images());
}

PermGroup automorphism_group(const GroupTable& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw Error(ErrorCode::OrderCapExceeded, "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(max_order));
  std::vector<Permutation> el;
  for (auto& map : isomorphisms(g, g)) el.emplace_back(std::move(map));
  return PermGroup::from_trusted(g.order(), std::move(el));
}

PermGroup holomorph(const GroupTable& g, std::size_t max_order) {
  const auto aut = automorphism_group(g, max_order);
  if (aut.size() * g.order() > kMaxHolomorphSize)
    throw Error(ErrorCode::OrderCapExceeded, "holomorph has " + std::to_string(aut.size() * g.order()) +
                                                 " elements, more than " + std::to_string(kMaxHolomorphSize));
  std::vector<Permutation> el;
  el.reserve(aut.size() * g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const auto lx = left_translation(g, x);
    for (const auto& theta : aut.elements()) el.push_back(lx * theta);
  }
  return PermGroup::from_trusted(g.order(), std::move(el));
}

bool in_holomorph(const GroupTable& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  return is_automorphism(g, left_translation(g, g.inv(p(0))) * p);
}

bool is_regular(const PermGroup& pg) {
  if (pg.size() != pg.degree()) return false;
  for (const auto& p : pg.elements())
    if (!p.is_identity() && p.has_fixed_point()) return false;
  return true;
}

bool normalized_by(const PermGroup& target, const PermGroup& actor) {
  if (target.degree() != actor.degree())
    throw Error(ErrorCode::DegreeMismatch, std::to_string(target.degree()) + " vs " + std::to_string(actor.degree()));
  for (const auto& a : actor.elements()) {
    const auto ai = a.inverse();
    for (const auto& t : target.elements())
      if (!target.contains(a * t * ai)) return false;
  }
  return true;
}

std::vector<PermGroup> normalized_subgroups(const PermGroup& target, const PermGroup& actor, std::size_t max_order) {
  if (target.degree() != actor.degree())
    throw Error(ErrorCode::DegreeMismatch, std::to_string(target.degree()) + " vs " + std::to_string(actor.degree()));
  const auto table = target.cayley_table();
  std::vector<PermGroup> out;
  for (const auto& s : subgroups(table, max_order)) {
    std::vector<Permutation> el;
    for (Element i : s.members()) el.push_back(target.elements()[i]);
    auto sub = PermGroup::from_trusted(target.degree(), std::move(el));
    if (normalized_by(sub, actor)) out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace skewbrace
