#include "doctest.h"
#include "helpers.hpp"

using namespace skewbrace;
using namespace skewbrace::test;

namespace {

using C = NilpotentAlgebra::Constants;

C zero(std::size_t d) { return C(d, std::vector<std::vector<long long>>(d, std::vector<long long>(d, 0))); }

ErrorCode make_error(std::uint32_t p, std::size_t d, const C& c, std::size_t cap = kDefaultMaxOrder) {
  try {
    NilpotentAlgebra::make(p, d, c, cap);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("algebra unexpectedly valid");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("NilpotentAlgebra::make validation") {
  CHECK(make_error(4, 2, zero(2)) == ErrorCode::NotPrime);
  CHECK(make_error(17, 1, zero(1)) == ErrorCode::BadParams);
  CHECK(make_error(3, 5, zero(5)) == ErrorCode::BadParams);
  CHECK(make_error(3, 2, zero(3)) == ErrorCode::BadParams);
  CHECK(make_error(13, 4, zero(4)) == ErrorCode::OrderCapExceeded);

  auto idem = zero(1);
  idem[0][0][0] = 1;  // x^2 = x
  CHECK(make_error(3, 1, idem) == ErrorCode::NotNilpotent);

  // x*y = z, y*x = x: (y x) y = x y = z but y (x y) = y z = 0.
  auto nonassoc = zero(3);
  nonassoc[0][1][2] = 1;
  nonassoc[1][0][0] = 1;
  CHECK(make_error(3, 3, nonassoc) == ErrorCode::NotAssociative);

  auto neg = zero(3);
  neg[0][1][2] = -1;
  CHECK(NilpotentAlgebra::make(5, 3, neg).constant(0, 1, 2) == 4);
}

TEST_CASE("vector encoding is base-p little-endian") {
  const auto a = algebra_a35(3);
  CHECK(a.size() == 27);
  CHECK(a.decode(vec3(3, 2, 1, 0)) == NilpotentAlgebra::Vector{2, 1, 0});
  for (Element x = 0; x < a.size(); ++x) CHECK(a.encode(a.decode(x)) == x);
}

TEST_CASE("circle product is a + b + ab") {
  const auto a = algebra_a34(5, 2);
  for (Element x = 0; x < a.size(); x += 7)
    for (Element y = 0; y < a.size(); y += 11) {
      const auto u = a.decode(x), v = a.decode(y);
      CHECK(a.circle(u, v) == a.add(a.add(u, v), a.mul(u, v)));
    }
  const auto circ = circle_group(a);
  CHECK(circ.order() == 125);
  CHECK(brace_from_algebra(a).star() == additive_group(a));
}

TEST_CASE("a35 circle group is Heisenberg; a34 is not") {
  CHECK(find_isomorphism(circle_group(algebra_a35(3)), heisenberg(3)).has_value());
  CHECK(circle_group(algebra_a35(5)).exponent() == 5);
  // A^3 = 0 and p | C(p, 2) for odd p, so (1 + a)^p = 1.
  CHECK(circle_group(algebra_a34(3, 1)).exponent() == 3);
  CHECK_THROWS_AS(algebra_a34(3, 3), Error);
}

TEST_CASE("algebra left ideals coincide with brace left ideals") {
  for (const auto& a : {algebra_a35(3), algebra_a34(3, 0), algebra_a34(3, 1), algebra_a34(3, 2), algebra_a35(5)})
    CHECK(as_sets(left_ideals(a)) == as_sets(left_ideals(brace_from_algebra(a))));
}

TEST_CASE("left ideal counts") {
  CHECK(left_ideals(algebra_a35(3)).size() == 7);
  CHECK(left_ideals(algebra_a35(5)).size() == 9);
  CHECK(left_ideals(algebra_a34(3, 1)).size() == 7);
  CHECK(left_ideals(algebra_a34(3, 2)).size() == 7);
  CHECK(left_ideals(algebra_a34(5, 2)).size() == 9);
  // delta = 0 degenerates and has p more.
  CHECK(left_ideals(algebra_a34(3, 0)).size() == 10);
  CHECK(left_ideals(algebra_a34(5, 0)).size() == 14);
}

TEST_CASE("a35 Galois report") {
  const auto r = galois_report(brace_from_algebra(algebra_a35(3)));
  CHECK(r.count_circ_stable == 7);
  CHECK(r.count_circ_subgroups == 19);
  CHECK(r.ratio.str() == "7/19");
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(91));
}
