#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "skewbrace/json_io.hpp"

using namespace skewbrace;
using namespace skewbrace::test;
using skewbrace::json::Json;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(SKEWBRACE_TEST_DATA) + "/" + name);
  return Json::parse(in);
}

ErrorCode parse_error(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("round trips") {
  const auto g = heisenberg(3);
  CHECK(json::group_from_json(json::to_json(g)) == g);
  const auto pg = holomorph(cyclic_group(5));
  CHECK(json::perm_group_from_json(json::to_json(pg)) == pg);
  const auto b = rump8();
  CHECK(json::brace_from_json(json::to_json(b)) == b);
  const auto a = algebra_a34(5, 2);
  const auto a2 = json::algebra_from_json(json::to_json(a));
  CHECK(a2.constants() == a.constants());
  const auto fp = heis_fpf_pair(3);
  CHECK(brace_from_fpf_pair(json::fpf_pair_from_json(json::to_json(fp))) == brace_from_fpf_pair(fp));
  const auto ef = sn_factorization(3);
  CHECK(json::exact_factorization_from_json(json::to_json(ef)).left() == ef.left());
}

TEST_CASE("report JSON keeps schema key order") {
  const auto r = galois_report(trivial_brace(cyclic_group(6)));
  const auto dumped = json::to_json(r).dump();
  CHECK(dumped.rfind(R"({"stable":4,"subgroups":4,"ratio":"1/1","stable_list":[[0],)", 0) == 0);
}

TEST_CASE("kind detection") {
  CHECK(json::detect_kind(load("z4.json")) == json::Kind::Group);
  CHECK(json::detect_kind(load("trivial_z6.json")) == json::Kind::Brace);
  CHECK(json::detect_kind(load("s3_right_regular.json")) == json::Kind::PermGroup);
  CHECK(json::detect_kind(load("s3_factorization.json")) == json::Kind::ExactFactorization);
  CHECK(json::detect_kind(load("z3_fpf.json")) == json::Kind::FpfPair);
  CHECK(json::detect_kind(load("a35_p3.json")) == json::Kind::Algebra);
  CHECK(json::detect_kind(Json::parse(R"({"x":1})")) == json::Kind::Unknown);
}

TEST_CASE("schema violations are ParseError, math violations keep their code") {
  CHECK(parse_error([] { json::group_from_json(Json::parse(R"({"order":2})")); }) == ErrorCode::ParseError);
  CHECK(parse_error([] { json::group_from_json(Json::parse(R"({"order":2,"table":"x"})")); }) == ErrorCode::ParseError);
  CHECK(parse_error([] { json::group_from_json(Json::parse(R"({"order":3,"table":[[0,1],[1,0]]})")); }) ==
        ErrorCode::ParseError);
  CHECK(parse_error([] { json::group_from_json(load("broken_group.json")); }) == ErrorCode::NotLatinSquare);
  CHECK(parse_error([] { json::perm_group_from_json(Json::parse(R"({"degree":2,"elements":[[0,0]]})")); }) ==
        ErrorCode::NotAPermutation);
}

TEST_CASE("algebra file") {
  const auto a = json::algebra_from_json(load("a35_p3.json"));
  CHECK(a.constants() == algebra_a35(3).constants());
}
