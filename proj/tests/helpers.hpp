#pragma once

#include <set>
#include <vector>

#include "oracles.hpp"
#include "skewbrace/fixtures.hpp"

namespace skewbrace::test {

// D_4 = <c, s | c^4 = s^2 = e, cs = sc^3> with s^i c^j at 4i + j.
inline GroupTable dihedral8() {
  return GroupTable::from_operation(8, [](Element x, Element y) {
    const Element i = x / 4, j = x % 4, k = y / 4, l = y % 4;
    return ((i + k) % 2) * 4 + ((k ? (4 - j) % 4 : j) + l) % 4;
  });
}

inline std::set<oracle::MemberSet> as_sets(const std::vector<Subgroup>& list) {
  std::set<oracle::MemberSet> out;
  for (const auto& s : list) out.emplace(s.members().begin(), s.members().end());
  return out;
}

inline std::vector<Element> all_elements(std::size_t n) {
  std::vector<Element> v(n);
  for (Element i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Index of the Heisenberg / F_p^3 vector (a, b, c).
inline Element vec3(std::uint32_t p, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return a % p + (b % p) * p + (c % p) * p * p;
}

}  // namespace skewbrace::test
