#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "skewbrace/json_io.hpp"

using namespace skewbrace;
using namespace skewbrace::test;

namespace {

json::Json load(const std::string& name) {
  std::ifstream in(std::string(SKEWBRACE_TEST_DATA) + "/" + name);
  return json::Json::parse(in);
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

std::vector<PermGroup> regular_subgroups_of_holomorph(const GroupTable& g) {
  const auto hol = holomorph(g);
  std::vector<PermGroup> out;
  for (const auto& s : subgroups(hol.cayley_table())) {
    if (s.size() != g.order()) continue;
    std::vector<Permutation> el;
    for (Element x : s.members()) el.push_back(hol.elements()[x]);
    auto pg = PermGroup::from_trusted(g.order(), std::move(el));
    if (is_regular(pg)) out.push_back(std::move(pg));
  }
  return out;
}

}  // namespace

TEST_CASE("left regular representation gives the trivial brace") {
  for (const auto& g : {cyclic_group(6), symmetric_group(3), dihedral8()})
    CHECK(brace_from_holomorph_regular(g, left_regular(g)) == trivial_brace(g));
}

TEST_CASE("right regular representation of S_3 gives the opposite circle product") {
  const auto g = symmetric_group(3);
  const auto rho = json::perm_group_from_json(load("s3_right_regular.json"));
  CHECK(rho == right_regular(g));
  const auto b = brace_from_holomorph_regular(g, rho);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) CHECK(b.circ().mul(x, y) == g.mul(y, x));
}

TEST_CASE("brace_from_holomorph_regular errors") {
  const auto z5 = cyclic_group(5);
  CHECK(error_of([&] { brace_from_holomorph_regular(z5, left_regular(cyclic_group(4))); }) == ErrorCode::DegreeMismatch);
  CHECK(error_of([&] { brace_from_holomorph_regular(z5, automorphism_group(z5)); }) == ErrorCode::NotRegular);
  // x -> x + 2 is affine but the 5-cycle (0 2 1 3 4) is not.
  const Permutation c({2, 3, 1, 4, 0});
  const auto bad = PermGroup::generated_by(5, std::vector<Permutation>{c});
  REQUIRE(is_regular(bad));
  CHECK(error_of([&] { brace_from_holomorph_regular(z5, bad); }) == ErrorCode::NotInHolomorph);
}

TEST_CASE("every regular subgroup of Hol(G) is recovered as lambda_circ") {
  for (const auto& g : {cyclic_group(4), elementary_abelian(2, 2), symmetric_group(3), dihedral8(), cyclic_group(9)}) {
    const auto regs = regular_subgroups_of_holomorph(g);
    CHECK_FALSE(regs.empty());
    for (const auto& r : regs) {
      const auto b = brace_from_holomorph_regular(g, r);
      CHECK(b.star() == g);
      CHECK(beta_embedding(BraceIso::identity(b)) == r);
    }
  }
  CHECK(regular_subgroups_of_holomorph(cyclic_group(4)).size() == 2);
  CHECK(regular_subgroups_of_holomorph(elementary_abelian(2, 2)).size() == 4);
}

TEST_CASE("BraceIso::make checks the map") {
  const auto b = trivial_brace(cyclic_group(4));
  CHECK(error_of([&] { BraceIso::make(b, cyclic_group(4), {0, 2, 1, 3}); }) == ErrorCode::NotAnIsomorphism);
  const auto iso = BraceIso::make(b, cyclic_group(4), {0, 3, 2, 1});
  for (Element g = 0; g < 4; ++g) CHECK(iso.b(iso.a(g)) == g);
}

TEST_CASE("S_3 = A_3 * <(0 1)> exact factorization") {
  const auto ef = json::exact_factorization_from_json(load("s3_factorization.json"));
  CHECK(ef.left().members() == std::vector<Element>{0, 3, 4});
  // (0 2) = [1,2,0] * (0 1).
  CHECK(ef.factorize(5) == std::pair<Element, Element>{3, 2});
  for (Element x = 0; x < 6; ++x) {
    const auto [l, r] = ef.factorize(x);
    CHECK(ef.left().contains(l));
    CHECK(ef.right().contains(r));
    CHECK(ef.group().mul(l, r) == x);
  }
  const auto g = symmetric_group(3);
  const auto a3 = Subgroup::checked(g, {0, 3, 4});
  CHECK(error_of([&] { ExactFactorization::make(g, a3, a3); }) == ErrorCode::NotComplementary);
  CHECK(error_of([&] { ExactFactorization::make(g, a3, Subgroup::checked(cyclic_group(4), {0, 2})); }) ==
        ErrorCode::NotComplementary);
}

TEST_CASE("brace from an exact factorization has circle group H x J") {
  for (const auto& ef : {sn_factorization(3), sn_factorization(4), zp_hol_factorization(5), zp_hol_factorization(7)}) {
    const auto [b, iso] = brace_from_exact_factorization(ef);
    CHECK(b.star() == ef.group());
    CHECK(is_isomorphism(b.circ(), iso.gamma(), iso.a_map()));
    CHECK(iso.gamma().order() == ef.left().size() * ef.right().size());
    const auto alpha = alpha_embedding(iso);
    CHECK(is_regular(alpha));
    CHECK(normalized_by(alpha, left_regular(iso.gamma())));
    CHECK(is_regular(beta_embedding(iso)));
  }
}

TEST_CASE("S_5 factorization: stable subgroups are e, A_5, S_5") {
  const auto ef = sn_factorization(5);
  const auto [b, iso] = brace_from_exact_factorization(ef);
  const auto stable = circ_stable_subgroups(b);
  REQUIRE(stable.size() == 3);
  CHECK(stable[0].size() == 1);
  CHECK(stable[1] == ef.left());
  CHECK(stable[2].size() == 120);
}

TEST_CASE("Z_p x| Z_p^* holomorph factorization") {
  for (std::uint32_t p : {5U, 7U, 11U}) {
    const auto [b, iso] = brace_from_exact_factorization(zp_hol_factorization(p));
    std::size_t divisors = 0;
    for (std::uint32_t d = 1; d <= p - 1; ++d) divisors += (p - 1) % d == 0;
    CHECK(circ_stable_subgroups(b).size() == 1 + divisors);
  }
}

TEST_CASE("FpfPair validation") {
  const auto z3 = cyclic_group(3);
  CHECK(error_of([&] { FpfPair::make(z3, cyclic_group(4), {0, 1, 2}, {0, 0, 0}); }) == ErrorCode::OrderMismatch);
  CHECK(error_of([&] { FpfPair::make(z3, z3, {0, 1, 3}, {0, 0, 0}); }) == ErrorCode::IndexOutOfRange);
  CHECK(error_of([&] { FpfPair::make(z3, z3, {0, 1, 1}, {0, 0, 0}); }) == ErrorCode::NotHomomorphism);
  CHECK(error_of([&] { FpfPair::make(z3, z3, {0, 0, 0}, {0, 0, 0}); }) == ErrorCode::NotFixedPointFree);
  const auto pair = json::fpf_pair_from_json(load("z3_fpf.json"));
  CHECK(brace_from_fpf_pair(pair) == trivial_brace(z3));
}

TEST_CASE("Heisenberg fixed-point-free pair") {
  const auto pair = heis_fpf_pair(3);
  const auto beta = fpf_beta(pair);
  CHECK(is_regular(beta));
  for (const auto& p : beta.elements()) CHECK(in_holomorph(pair.group(), p));
  const auto b = brace_from_fpf_pair(pair);
  CHECK(find_isomorphism(b.circ(), pair.gamma()).has_value());
  const auto r = galois_report(b);
  CHECK(r.count_circ_stable == 10);
  CHECK(r.count_circ_subgroups == 28);
}
