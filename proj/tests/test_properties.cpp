// Randomised checks with fixed seeds.
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace skewbrace;
using namespace skewbrace::test;

namespace {

using Rng = std::mt19937;

std::vector<Element> random_relabel(std::size_t n, Rng& rng) {
  std::vector<Element> p = all_elements(n);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

GroupTable relabel(const GroupTable& g, const std::vector<Element>& p) {
  std::vector<Element> pi(p.size());
  for (Element i = 0; i < p.size(); ++i) pi[p[i]] = i;
  return GroupTable::from_operation(g.order(), [&](Element x, Element y) { return p[g.mul(pi[x], pi[y])]; });
}

SkewBrace relabel(const SkewBrace& b, const std::vector<Element>& p) {
  return SkewBrace::make(relabel(b.star(), p), relabel(b.circ(), p));
}

GroupTable random_small_group(Rng& rng) {
  const std::vector<GroupTable> pool = {cyclic_group(12), symmetric_group(3), dihedral8(), elementary_abelian(2, 3),
                                        direct_product(cyclic_group(2), symmetric_group(3)), zp_semidirect(5),
                                        heisenberg(3), direct_product(cyclic_group(3), cyclic_group(3))};
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

SkewBrace random_brace(Rng& rng) {
  const std::vector<SkewBrace> pool = {rump8(), brace_from_algebra(algebra_a35(3)), brace_from_algebra(algebra_a34(3, 1)),
                                       brace_from_fpf_pair(heis_fpf_pair(3)),
                                       brace_from_exact_factorization(sn_factorization(3)).first,
                                       brace_from_exact_factorization(zp_hol_factorization(5)).first,
                                       trivial_brace(dihedral8())};
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

}  // namespace

TEST_CASE("subgroup counts and fingerprints are relabelling invariant") {
  Rng rng(1);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = random_small_group(rng);
    const auto p = random_relabel(g.order(), rng);
    const auto h = relabel(g, p);
    CHECK(subgroups(h).size() == subgroups(g).size());
    CHECK(fingerprint(h) == fingerprint(g));
    const auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(g, h, *iso));
    CHECK(is_isomorphism(g, h, p));
  }
}

TEST_CASE("generate matches the closure oracle on random subsets") {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_small_group(rng);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    std::vector<Element> gens(1 + trial % 3);
    for (auto& x : gens) x = pick(rng);
    const auto s = generate(g, gens);
    const auto m = oracle::closure(g, oracle::MemberSet(gens.begin(), gens.end()));
    CHECK(s.members() == std::vector<Element>(m.begin(), m.end()));
  }
}

TEST_CASE("brace invariants survive relabelling") {
  Rng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const auto b = random_brace(rng);
    const auto p = random_relabel(b.order(), rng);
    const auto c = relabel(b, p);
    const auto rb = galois_report(b), rc = galois_report(c);
    CHECK(rb.count_circ_stable == rc.count_circ_stable);
    CHECK(rb.count_circ_subgroups == rc.count_circ_subgroups);
    CHECK(left_ideals(b).size() == left_ideals(c).size());
    // Transported stable subgroups are stable.
    for (const auto& s : rb.stable_list) {
      std::vector<Element> image;
      for (Element x : s.members()) image.push_back(p[x]);
      std::sort(image.begin(), image.end());
      CHECK(is_circ_stable(c, Subgroup::checked(c.star(), image)));
    }
  }
}

TEST_CASE("random regular subgroups of holomorphs yield braces") {
  Rng rng(4);
  for (const auto& g : {cyclic_group(8), dihedral8(), elementary_abelian(2, 2), symmetric_group(3)}) {
    const auto hol = holomorph(g);
    const auto table = hol.cayley_table();
    std::size_t found = 0;
    for (const auto& s : subgroups(table)) {
      if (s.size() != g.order()) continue;
      std::vector<Permutation> el;
      for (Element x : s.members()) el.push_back(hol.elements()[x]);
      const auto pg = PermGroup::from_trusted(g.order(), el);
      if (!is_regular(pg)) continue;
      ++found;
      const auto b = brace_from_holomorph_regular(g, pg);
      const auto q = random_relabel(g.order(), rng);
      CHECK(relabel(b, q).order() == g.order());
    }
    CHECK(found > 0);
  }
}

TEST_CASE("random nilpotent algebras") {
  Rng rng(5);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 200 && accepted < 15; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    const std::size_t d = 3;
    std::uniform_int_distribution<long long> coef(0, p - 1);
    NilpotentAlgebra::Constants c(d, std::vector<std::vector<long long>>(d, std::vector<long long>(d, 0)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = std::max(i, j) + 1; k < d; ++k) c[i][j][k] = coef(rng);
    std::optional<NilpotentAlgebra> a;
    try {
      a = NilpotentAlgebra::make(p, d, c);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAssociative);
      continue;
    }
    ++accepted;
    const auto b = brace_from_algebra(*a);
    CHECK(as_sets(left_ideals(*a)) == as_sets(left_ideals(b)));
    // Abelian star: every left ideal is circ-stable and conversely.
    CHECK(left_ideals(b).size() == circ_stable_subgroups(b).size());
  }
  CHECK(accepted >= 5);
}
