#include "doctest.h"
#include "helpers.hpp"

using namespace skewbrace;
using namespace skewbrace::test;

namespace {

ErrorCode validate_error(const std::vector<std::vector<long long>>& raw) {
  try {
    GroupTable::validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("table unexpectedly valid");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("validate_group_table accepts Z_2 and rejects broken tables") {
  const auto z2 = GroupTable::validate({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inv(1) == 1);

  CHECK(validate_error({{0, 1}, {1, 1}}) == ErrorCode::NotLatinSquare);
  CHECK(validate_error({{0, 1}, {1}}) == ErrorCode::NotLatinSquare);
  CHECK(validate_error({{0, 2}, {2, 0}}) == ErrorCode::NotLatinSquare);
  CHECK(validate_error({{1, 0}, {0, 1}}) == ErrorCode::NoIdentity);
  // Latin square with identity 0 that is not associative (order-5 loop).
  CHECK(validate_error({{0, 1, 2, 3, 4},
                        {1, 0, 3, 4, 2},
                        {2, 4, 0, 1, 3},
                        {3, 2, 4, 0, 1},
                        {4, 3, 1, 2, 0}}) == ErrorCode::NotAssociative);
}

TEST_CASE("D_4 from its presentation is a valid group") {
  const auto d4 = dihedral8();
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());
  CHECK(d4.center_size() == 2);
  CHECK(d4.exponent() == 4);
  CHECK(d4.mul(1, 4) == 7);  // cs = sc^3
}

TEST_CASE("subgroup counts") {
  CHECK(subgroups(cyclic_group(4)).size() == 3);
  CHECK(subgroups(dihedral8()).size() == 10);
  CHECK(subgroups(cyclic_group(6)).size() == 4);
  CHECK(subgroups(symmetric_group(3)).size() == 6);
  CHECK(subgroups(symmetric_group(4)).size() == 30);
}

TEST_CASE("Heis_3(F_3) subgroup lattice agrees with the pairwise-join oracle") {
  const auto h = heisenberg(3);
  const auto subs = subgroups(h);
  CHECK(as_sets(subs) == oracle::subgroups_by_pairwise_join(h));
  // 1 + (p^2 + p + 1) + (p + 1) + 1 at p = 3.
  CHECK(subs.size() == 19);
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& s : subs) ++by_size[s.size()];
  CHECK(by_size == std::map<std::size_t, std::size_t>{{1, 1}, {3, 13}, {9, 4}, {27, 1}});
}

TEST_CASE("subgroups matches brute-force subset enumeration on small groups") {
  for (const auto& g : {cyclic_group(8), dihedral8(), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(4)),
                        elementary_abelian(2, 3), direct_product(cyclic_group(2), cyclic_group(6)), zp_semidirect(5, 4)}) {
    CHECK(as_sets(subgroups(g)) == oracle::subgroups_by_subsets(g));
  }
}

TEST_CASE("subgroups output is canonical and lattice-closed") {
  const auto g = symmetric_group(4);
  const auto subs = subgroups(g);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  CHECK(subs.front().members() == std::vector<Element>{0});
  CHECK(subs.back().size() == 24);
  const auto sets = as_sets(subs);
  for (const auto& a : subs) {
    CHECK(g.order() % a.size() == 0);
    for (const auto& b : subs) {
      const auto meet = (a.mask() & b.mask()).members();
      CHECK(sets.count(oracle::MemberSet(meet.begin(), meet.end())) == 1);
    }
  }
}

TEST_CASE("subgroups enforces the order cap") {
  CHECK_THROWS_AS(subgroups(cyclic_group(10), 8), Error);
  try {
    subgroups(cyclic_group(10), 8);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderCapExceeded);
  }
  CHECK(subgroups(cyclic_group(10), 10).size() == 4);
}

TEST_CASE("Subgroup::checked rejects non-subgroups") {
  const auto z4 = cyclic_group(4);
  CHECK(Subgroup::checked(z4, {0, 2}).size() == 2);
  CHECK_THROWS_AS(Subgroup::checked(z4, {0, 1}), Error);
  CHECK_THROWS_AS(Subgroup::checked(z4, {1, 2, 3}), Error);
}

TEST_CASE("automorphism_group orders") {
  CHECK(automorphism_group(cyclic_group(4)).size() == 2);
  CHECK(automorphism_group(cyclic_group(5)).size() == 4);
  const auto v4 = elementary_abelian(2, 2);
  CHECK(oracle::automorphism_count_brute(v4) == 6);
  CHECK(automorphism_group(v4).size() == 6);
  for (const auto& g : {dihedral8(), symmetric_group(3), cyclic_group(8), direct_product(cyclic_group(2), cyclic_group(4))})
    CHECK(automorphism_group(g).size() == oracle::automorphism_count_brute(g));
  CHECK(automorphism_group(heisenberg(3)).size() == 432);  // p^2 |GL_2(F_3)|
}

TEST_CASE("automorphism group elements fix 0, preserve the table, and are sorted") {
  const auto d4 = dihedral8();
  const auto aut = automorphism_group(d4);
  CHECK(aut.elements().front().is_identity());
  for (const auto& p : aut.elements()) {
    CHECK(p(0) == 0);
    CHECK(is_automorphism(d4, p));
  }
  CHECK(std::is_sorted(aut.elements().begin(), aut.elements().end()));
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))).has_value());
  CHECK_FALSE(find_isomorphism(cyclic_group(6), symmetric_group(3)).has_value());
  CHECK_FALSE(find_isomorphism(dihedral8(), elementary_abelian(2, 3)).has_value());
  const auto map = find_isomorphism(heisenberg(3), circle_group(algebra_a35(3)));
  REQUIRE(map.has_value());
  CHECK(is_isomorphism(heisenberg(3), circle_group(algebra_a35(3)), *map));
}

TEST_CASE("greedy generators generate") {
  for (const auto& g : {heisenberg(3), symmetric_group(4), elementary_abelian(3, 3)}) {
    const auto gens = greedy_generators(g);
    CHECK(generate(g, gens).size() == g.order());
  }
  CHECK(greedy_generators(elementary_abelian(3, 3)).size() == 3);
  CHECK(greedy_generators(cyclic_group(12)).size() == 1);
}
