#include "skewbrace/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

namespace skewbrace {

namespace {

std::string cell(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

void check_cap(std::size_t order, std::size_t max_order) {
  if (order > max_order)
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
}

}  // namespace

GroupTable GroupTable::validate(const std::vector<std::vector<long long>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorCode::NotLatinSquare, "empty table");
  for (std::size_t x = 0; x < n; ++x)
    if (raw[x].size() != n)
      throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(x) + " has length " +
                                                 std::to_string(raw[x].size()) + ", expected " +
                                                 std::to_string(n));

  GroupTable g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const long long v = raw[x][y];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorCode::NotLatinSquare, "entry " + cell(x, y) + " = " + std::to_string(v) + " out of range");
      g.table_[x * n + y] = static_cast<Element>(v);
    }

  // Latin square: every row and column is a permutation.
  std::vector<std::size_t> seen(n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element v = g.table_[x * n + y];
      if (seen[v] == x) throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(x) + " repeats " + std::to_string(v));
      seen[v] = x;
    }
  std::fill(seen.begin(), seen.end(), SIZE_MAX);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const Element v = g.table_[x * n + y];
      if (seen[v] == y) throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(y) + " repeats " + std::to_string(v));
      seen[v] = y;
    }

  for (std::size_t x = 0; x < n; ++x)
    if (g.table_[x] != x || g.table_[x * n] != x)
      throw Error(ErrorCode::NoIdentity, "element 0 is not a two-sided identity at " + std::to_string(x));

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = g.table_[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (g.table_[xy * n + z] != g.table_[x * n + g.table_[y * n + z]])
          throw Error(ErrorCode::NotAssociative,
                      "(xy)z != x(yz) at (" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
      }
    }

  g.inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      if (g.table_[x * n + y] == 0 && g.table_[y * n + x] == 0) {
        g.inverse_[x] = static_cast<Element>(y);
        found = true;
      }
    if (!found) throw Error(ErrorCode::MissingInverse, "element " + std::to_string(x) + " has no inverse");
  }
  return g;
}

std::vector<std::vector<Element>> GroupTable::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t x = 0; x < order_; ++x)
    out[x].assign(table_.begin() + static_cast<std::ptrdiff_t>(x * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * order_));
  return out;
}

std::size_t GroupTable::element_order(Element x) const noexcept {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (table_[x * order_ + y] != table_[y * order_ + x]) return false;
  return true;
}

std::size_t GroupTable::exponent() const {
  std::size_t e = 1;
  for (Element x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
  return e;
}

std::size_t GroupTable::center_size() const noexcept {
  std::size_t c = 0;
  for (std::size_t x = 0; x < order_; ++x) {
    bool central = true;
    for (std::size_t y = 0; y < order_ && central; ++y)
      central = table_[x * order_ + y] == table_[y * order_ + x];
    c += central ? 1 : 0;
  }
  return c;
}

Subgroup Subgroup::checked(const GroupTable& g, std::vector<Element> members) {
  ElementSet mask(g.order());
  for (Element x : members) {
    if (x >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
    mask.insert(x);
  }
  if (!is_closed_subset(g, mask)) throw Error(ErrorCode::NotASubgroup, "set is not closed under the product");
  return from_mask(std::move(mask));
}

Subgroup Subgroup::from_mask(ElementSet mask) {
  Subgroup s;
  s.members_ = mask.members();
  s.mask_ = std::move(mask);
  return s;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members_ < b.members_;
}

bool is_closed_subset(const GroupTable& g, const ElementSet& set) {
  if (!set.contains(0)) return false;
  const auto m = set.members();
  for (Element x : m)
    for (Element y : m)
      if (!set.contains(g.mul(x, y))) return false;
  return true;
}

Subgroup generate(const GroupTable& g, std::span<const Element> gens) {
  ElementSet mask(g.order());
  mask.insert(0);
  std::vector<Element> frontier{0};
  std::vector<Element> next;
  while (!frontier.empty()) {
    next.clear();
    for (Element x : frontier)
      for (Element s : gens) {
        const Element y = g.mul(x, s);
        if (mask.insert(y)) next.push_back(y);
      }
    frontier.swap(next);
  }
  return Subgroup::from_mask(std::move(mask));
}

std::vector<Subgroup> cyclic_subgroups(const GroupTable& g) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<Subgroup> out;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    auto s = generate(g, gen);
    if (index.emplace(s.mask(), out.size()).second) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> subgroups(const GroupTable& g, std::size_t max_order) {
  check_cap(g.order(), max_order);

  struct Node {
    ElementSet mask;
    std::vector<Element> gens;
  };
  std::vector<Node> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  // Cyclic subgroups, each with a single generator.
  std::vector<std::pair<ElementSet, Element>> cyclics;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    auto s = generate(g, gen);
    if (index.emplace(s.mask(), found.size()).second) {
      found.push_back({s.mask(), {x}});
      cyclics.emplace_back(s.mask(), x);
    }
  }

  std::deque<std::size_t> work(found.size());
  std::iota(work.begin(), work.end(), std::size_t{0});
  std::vector<Element> gens;
  while (!work.empty()) {
    const std::size_t cur = work.front();
    work.pop_front();
    for (const auto& [cmask, cgen] : cyclics) {
      if (cmask.subset_of(found[cur].mask)) continue;
      gens = found[cur].gens;
      gens.push_back(cgen);
      auto joined = generate(g, gens);
      if (index.emplace(joined.mask(), found.size()).second) {
        found.push_back({joined.mask(), gens});
        work.push_back(found.size() - 1);
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& node : found) out.push_back(Subgroup::from_mask(std::move(node.mask)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> greedy_generators(const GroupTable& g) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::vector<std::size_t> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders[a] > orders[b]; });

  std::vector<Element> gens;
  ElementSet span(g.order());
  span.insert(0);
  while (span.count() < g.order()) {
    // Among elements outside the span, take the one enlarging it most; ties go
    // to higher element order.
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x : by_order) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      const auto s = generate(g, gens);
      gens.pop_back();
      if (s.size() > best_size) {
        best_size = s.size();
        best = x;
        if (best_size == g.order()) break;
      }
    }
    gens.push_back(best);
    span = generate(g, gens).mask();
  }
  return gens;
}

bool is_homomorphism(const GroupTable& from, const GroupTable& to, std::span<const Element> map) {
  if (map.size() != from.order()) return false;
  for (Element x : map)
    if (x >= to.order()) return false;
  for (Element x = 0; x < from.order(); ++x)
    for (Element y = 0; y < from.order(); ++y)
      if (map[from.mul(x, y)] != to.mul(map[x], map[y])) return false;
  return true;
}

bool is_isomorphism(const GroupTable& from, const GroupTable& to, std::span<const Element> map) {
  if (from.order() != to.order() || map.size() != from.order()) return false;
  ElementSet image(to.order());
  for (Element x : map) {
    if (x >= to.order() || !image.insert(x)) return false;
  }
  return is_homomorphism(from, to, map);
}

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Extends `map` from the identity along right multiplication by assigned
// generators. Returns false on a conflict, which means the partial generator
// assignment does not extend to a homomorphism.
bool extend_map(const GroupTable& from, const GroupTable& to, std::span<const Element> gens,
                std::span<const Element> images, std::vector<Element>& map) {
  std::fill(map.begin(), map.end(), kUnset);
  map[0] = 0;
  std::vector<Element> frontier{0};
  std::vector<Element> next;
  while (!frontier.empty()) {
    next.clear();
    for (Element x : frontier)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Element y = from.mul(x, gens[i]);
        const Element fy = to.mul(map[x], images[i]);
        if (map[y] == kUnset) {
          map[y] = fy;
          next.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    frontier.swap(next);
  }
  return true;
}

}  // namespace

std::vector<std::vector<Element>> isomorphisms(const GroupTable& from, const GroupTable& to, std::size_t limit) {
  std::vector<std::vector<Element>> out;
  if (from.order() != to.order() || limit == 0) return out;
  if (fingerprint(from) != fingerprint(to)) return out;

  const auto gens = greedy_generators(from);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t ord = from.element_order(gens[i]);
    for (Element y = 0; y < to.order(); ++y)
      if (to.element_order(y) == ord) candidates[i].push_back(y);
  }

  std::vector<Element> images(gens.size());
  std::vector<Element> map(from.order());
  // Depth-first over generator images, pruning with the partial extension.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (out.size() >= limit) return;
    if (depth == gens.size()) {
      if (is_isomorphism(from, to, map)) out.push_back(map);
      return;
    }
    for (Element y : candidates[depth]) {
      images[depth] = y;
      const std::span<const Element> gspan(gens.data(), depth + 1);
      const std::span<const Element> ispan(images.data(), depth + 1);
      if (!extend_map(from, to, gspan, ispan, map)) continue;
      self(self, depth + 1);
      if (out.size() >= limit) return;
    }
  };
  search(search, 0);
  return out;
}

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& from, const GroupTable& to) {
  auto all = isomorphisms(from, to, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

GroupFingerprint fingerprint(const GroupTable& g) {
  GroupFingerprint f;
  f.order = g.order();
  for (Element x = 0; x < g.order(); ++x) ++f.order_histogram[g.element_order(x)];
  f.center_size = g.center_size();
  f.abelian = g.is_abelian();
  f.exponent = 1;
  for (const auto& [ord, count] : f.order_histogram) f.exponent = std::lcm(f.exponent, ord);
  return f;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t nb = b.order();
  return GroupTable::from_operation(a.order() * nb, [&](Element x, Element y) {
    return a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
           b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
  });
}

GroupTable cyclic_group(std::size_t n) {
  return GroupTable::from_operation(n, [n](Element x, Element y) { return (x + y) % n; });
}

}  // namespace skewbrace
