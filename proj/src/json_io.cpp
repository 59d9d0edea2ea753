#include "skewbrace/json_io.hpp"

#include <string>

namespace skewbrace::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

std::vector<Element> element_list(const Json& j, const char* what) {
  const auto raw = get_as<std::vector<long long>>(j, what);
  std::vector<Element> out;
  out.reserve(raw.size());
  for (long long v : raw) {
    if (v < 0) throw Error(ErrorCode::ParseError, std::string(what) + ": negative element index");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

GroupTable table_with_order(const Json& table, const Json* order, const char* what) {
  auto raw = get_as<std::vector<std::vector<long long>>>(table, what);
  if (order && get_as<long long>(*order, "order") != static_cast<long long>(raw.size()))
    throw Error(ErrorCode::ParseError, std::string(what) + ": \"order\" does not match table size");
  return GroupTable::validate(raw);
}

Json rows_json(const GroupTable& g) {
  Json rows = Json::array();
  for (const auto& r : g.rows()) rows.push_back(r);
  return rows;
}

}  // namespace

GroupTable group_from_json(const Json& j) {
  return table_with_order(field(j, "table"), j.contains("order") ? &j.at("order") : nullptr, "table");
}

Json to_json(const GroupTable& g) {
  Json j;
  j["order"] = g.order();
  j["table"] = rows_json(g);
  return j;
}

PermGroup perm_group_from_json(const Json& j) {
  const auto degree = get_as<std::size_t>(field(j, "degree"), "degree");
  std::vector<Permutation> el;
  for (const auto& e : field(j, "elements")) el.emplace_back(element_list(e, "elements"));
  return PermGroup::from_elements(degree, std::move(el));
}

Json to_json(const PermGroup& pg) {
  Json j;
  j["degree"] = pg.degree();
  j["elements"] = Json::array();
  for (const auto& p : pg.elements()) j["elements"].push_back(p.images());
  return j;
}

SkewBrace brace_from_json(const Json& j) {
  const Json* order = j.contains("order") ? &j.at("order") : nullptr;
  return SkewBrace::make(table_with_order(field(j, "star"), order, "star"),
                         table_with_order(field(j, "circ"), order, "circ"));
}

Json to_json(const SkewBrace& b) {
  Json j;
  j["order"] = b.order();
  j["star"] = rows_json(b.star());
  j["circ"] = rows_json(b.circ());
  return j;
}

Json subgroup_list_to_json(const std::vector<Subgroup>& list) {
  Json arr = Json::array();
  for (const auto& s : list) arr.push_back(s.members());
  return arr;
}

Json to_json(const GaloisReport& r) {
  Json j;
  j["stable"] = r.count_circ_stable;
  j["subgroups"] = r.count_circ_subgroups;
  j["ratio"] = r.ratio.str();
  j["stable_list"] = subgroup_list_to_json(r.stable_list);
  return j;
}

FpfPair fpf_pair_from_json(const Json& j) {
  return FpfPair::make(group_from_json(field(j, "gamma")), group_from_json(field(j, "g")),
                       element_list(field(j, "f_l"), "f_l"), element_list(field(j, "f_r"), "f_r"));
}

Json to_json(const FpfPair& p) {
  Json j;
  j["gamma"] = to_json(p.gamma());
  j["g"] = to_json(p.group());
  j["f_l"] = p.f_l();
  j["f_r"] = p.f_r();
  return j;
}

ExactFactorization exact_factorization_from_json(const Json& j) {
  auto g = group_from_json(field(j, "g"));
  auto h = Subgroup::checked(g, element_list(field(j, "h"), "h"));
  auto jj = Subgroup::checked(g, element_list(field(j, "j"), "j"));
  return ExactFactorization::make(std::move(g), std::move(h), std::move(jj));
}

Json to_json(const ExactFactorization& ef) {
  Json j;
  j["g"] = to_json(ef.group());
  j["h"] = ef.left().members();
  j["j"] = ef.right().members();
  return j;
}

NilpotentAlgebra algebra_from_json(const Json& j) {
  const auto p = get_as<std::uint32_t>(field(j, "p"), "p");
  const auto dim = get_as<std::size_t>(field(j, "dim"), "dim");
  const auto mul = get_as<NilpotentAlgebra::Constants>(field(j, "mul"), "mul");
  return NilpotentAlgebra::make(p, dim, mul);
}

Json to_json(const NilpotentAlgebra& a) {
  Json j;
  j["p"] = a.p();
  j["dim"] = a.dim();
  j["mul"] = a.constants();
  return j;
}

Kind detect_kind(const Json& j) {
  if (!j.is_object()) return Kind::Unknown;
  if (j.contains("star") && j.contains("circ")) return Kind::Brace;
  if (j.contains("table")) return Kind::Group;
  if (j.contains("degree") && j.contains("elements")) return Kind::PermGroup;
  if (j.contains("gamma") && j.contains("f_l")) return Kind::FpfPair;
  if (j.contains("g") && j.contains("h") && j.contains("j")) return Kind::ExactFactorization;
  if (j.contains("p") && j.contains("mul")) return Kind::Algebra;
  return Kind::Unknown;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Group: return "group";
    case Kind::PermGroup: return "perm_group";
    case Kind::Brace: return "brace";
    case Kind::FpfPair: return "fpf_pair";
    case Kind::ExactFactorization: return "exact_factorization";
    case Kind::Algebra: return "algebra";
    case Kind::Unknown: break;
  }
  return "unknown";
}

}  // namespace skewbrace::json
