#include "skewbrace/brace.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace skewbrace {

SkewBrace SkewBrace::make(GroupTable star, GroupTable circ) {
  if (star.order() != circ.order())
    throw Error(ErrorCode::OrderMismatch, std::to_string(star.order()) + " vs " + std::to_string(circ.order()));
  if (star.identity() != circ.identity()) throw Error(ErrorCode::IdentityMismatch, "identities differ");
  const std::size_t n = star.order();
  for (Element g = 0; g < n; ++g) {
    const Element gi = star.inv(g);
    for (Element h = 0; h < n; ++h) {
      const Element gh = circ.mul(g, h);
      for (Element k = 0; k < n; ++k) {
        const Element lhs = circ.mul(g, star.mul(h, k));
        const Element rhs = star.mul(star.mul(gh, gi), circ.mul(g, k));
        if (lhs != rhs)
          throw Error(ErrorCode::BraceAxiomFailure, "(g, h, k) = (" + std::to_string(g) + ", " + std::to_string(h) +
                                                        ", " + std::to_string(k) + ")");
      }
    }
  }
  return SkewBrace(std::move(star), std::move(circ));
}

SkewBrace trivial_brace(const GroupTable& g) { return SkewBrace::make(g, g); }

Permutation brace_lambda(const SkewBrace& b, Element g) {
  if (g >= b.order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(g));
  std::vector<Element> im(b.order());
  for (Element x = 0; x < b.order(); ++x) im[x] = b.lambda(g, x);
  return Permutation(std::move(im));
}

namespace {

void require_star_subgroup(const SkewBrace& b, const Subgroup& s) {
  if (s.parent_order() != b.order() || !is_closed_subset(b.star(), s.mask()))
    throw Error(ErrorCode::NotAStarSubgroup, "argument is not a subgroup of the additive group");
}

}  // namespace

bool is_circ_stable(const SkewBrace& b, const Subgroup& s) {
  require_star_subgroup(b, s);
  const auto& star = b.star();
  for (Element g = 0; g < b.order(); ++g) {
    const Element gi = star.inv(g);
    for (Element x : s.members())
      if (!s.contains(star.mul(b.circ().mul(g, x), gi))) return false;
  }
  return true;
}

bool is_left_ideal(const SkewBrace& b, const Subgroup& s) {
  require_star_subgroup(b, s);
  for (Element g = 0; g < b.order(); ++g)
    for (Element x : s.members())
      if (!s.contains(b.lambda(g, x))) return false;
  return true;
}

bool satisfies_gv_condition(const SkewBrace& b, std::span<const Element> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "GV condition needs a nonempty subset");
  ElementSet mask(b.order());
  for (Element x : subset) {
    if (x >= b.order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
    mask.insert(x);
  }
  const auto& star = b.star();
  const auto members = mask.members();
  for (Element g = 0; g < b.order(); ++g)
    for (Element x : members) {
      const Element l = b.lambda(g, x);
      for (Element h = 0; h < b.order(); ++h)
        if (!mask.contains(star.mul(star.mul(h, l), star.inv(h)))) return false;
    }
  return true;
}

std::vector<Subgroup> circ_stable_subgroups(const SkewBrace& b, std::size_t max_order) {
  auto all = subgroups(b.star(), max_order);
  std::erase_if(all, [&](const Subgroup& s) { return !is_circ_stable(b, s); });
  return all;
}

std::vector<Subgroup> left_ideals(const SkewBrace& b, std::size_t max_order) {
  auto all = subgroups(b.star(), max_order);
  std::erase_if(all, [&](const Subgroup& s) { return !is_left_ideal(b, s); });
  return all;
}

Ratio Ratio::reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::BadParams, "zero denominator");
  const auto d = std::gcd(num, den);
  return {num / d, den / d};
}

GaloisReport galois_report(const SkewBrace& b, std::size_t max_order) {
  GaloisReport r;
  r.stable_list = circ_stable_subgroups(b, max_order);
  r.count_circ_stable = r.stable_list.size();
  r.count_circ_subgroups = subgroups(b.circ(), max_order).size();
  r.ratio = Ratio::reduced(r.count_circ_stable, r.count_circ_subgroups);
  return r;
}

}  // namespace skewbrace
