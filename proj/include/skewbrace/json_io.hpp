#pragma once

#include "json.hpp"

#include "skewbrace/algebra.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/constructors.hpp"

// Readers throw Error(ParseError) on schema violations and the usual
// validation errors on malformed objects. Writers emit canonical output with
// keys in schema order.
namespace skewbrace::json {

using Json = nlohmann::ordered_json;

GroupTable group_from_json(const Json& j);
Json to_json(const GroupTable& g);

PermGroup perm_group_from_json(const Json& j);
Json to_json(const PermGroup& pg);

SkewBrace brace_from_json(const Json& j);
Json to_json(const SkewBrace& b);

Json to_json(const GaloisReport& r);
Json subgroup_list_to_json(const std::vector<Subgroup>& list);

FpfPair fpf_pair_from_json(const Json& j);
Json to_json(const FpfPair& p);

ExactFactorization exact_factorization_from_json(const Json& j);
Json to_json(const ExactFactorization& ef);

NilpotentAlgebra algebra_from_json(const Json& j);
Json to_json(const NilpotentAlgebra& a);

enum class Kind { Group, PermGroup, Brace, FpfPair, ExactFactorization, Algebra, Unknown };
/// Guesses the object kind from its keys.
Kind detect_kind(const Json& j);
const char* kind_name(Kind k);

}  // namespace skewbrace::json
