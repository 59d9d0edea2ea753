#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewbrace/fixtures.hpp"
#include "skewbrace/json_io.hpp"

namespace py = pybind11;
using namespace skewbrace;

namespace {

using Table = std::vector<std::vector<long long>>;

Table to_raw(const GroupTable& g) {
  Table t(g.order(), std::vector<long long>(g.order()));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
  return t;
}

std::vector<std::vector<Element>> member_lists(const std::vector<Subgroup>& list) {
  std::vector<std::vector<Element>> out;
  for (const auto& s : list) out.push_back(s.members());
  return out;
}

std::vector<Element> checked_elements(std::size_t order, const std::vector<long long>& raw) {
  std::vector<Element> out;
  for (long long x : raw) {
    if (x < 0 || static_cast<std::size_t>(x) >= order)
      throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
    out.push_back(static_cast<Element>(x));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_skewbrace, m) {
  m.doc() = "Finite skew braces over Cayley tables";

  // Leaked on purpose: the type must outlive interpreter teardown.
  static PyObject* error = py::exception<Error>(m, "SkewBraceError", PyExc_ValueError).release().ptr();
  // args are (code, message); `code` is also set as an attribute.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error)(to_string(e.code()), e.what());
      instance.attr("code") = to_string(e.code());
      PyErr_SetObject(error, instance.ptr());
    }
  });

  py::class_<GroupTable>(m, "Group")
      .def(py::init([](const Table& t) { return GroupTable::validate(t); }), py::arg("table"))
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("table", &to_raw)
      .def("mul", [](const GroupTable& g, Element x, Element y) {
        checked_elements(g.order(), {x, y});
        return g.mul(x, y);
      })
      .def("inv", [](const GroupTable& g, Element x) {
        checked_elements(g.order(), {x});
        return g.inv(x);
      })
      .def("element_order", [](const GroupTable& g, Element x) {
        checked_elements(g.order(), {x});
        return g.element_order(x);
      })
      .def_property_readonly("is_abelian", &GroupTable::is_abelian)
      .def_property_readonly("exponent", &GroupTable::exponent)
      .def("__len__", &GroupTable::order)
      .def("__eq__", [](const GroupTable& a, const GroupTable& b) { return a == b; });

  py::class_<SkewBrace>(m, "Brace")
      .def(py::init([](const Table& star, const Table& circ) {
             return SkewBrace::make(GroupTable::validate(star), GroupTable::validate(circ));
           }),
           py::arg("star"), py::arg("circ"))
      .def_property_readonly("order", &SkewBrace::order)
      .def_property_readonly("star", &SkewBrace::star)
      .def_property_readonly("circ", &SkewBrace::circ)
      .def("lambda_", [](const SkewBrace& b, Element g, Element x) {
        checked_elements(b.order(), {g, x});
        return b.lambda(g, x);
      })
      .def("circ_stable_subgroups",
           [](const SkewBrace& b, std::size_t cap) { return member_lists(circ_stable_subgroups(b, cap)); },
           py::arg("max_order") = kDefaultMaxOrder)
      .def("left_ideals", [](const SkewBrace& b, std::size_t cap) { return member_lists(left_ideals(b, cap)); },
           py::arg("max_order") = kDefaultMaxOrder)
      .def("satisfies_gv_condition",
           [](const SkewBrace& b, const std::vector<long long>& subset) {
             return satisfies_gv_condition(b, checked_elements(b.order(), subset));
           })
      .def("to_json", [](const SkewBrace& b) { return json::to_json(b).dump(); })
      .def("__len__", &SkewBrace::order)
      .def("__eq__", [](const SkewBrace& a, const SkewBrace& b) { return a == b; });

  m.def("subgroups", [](const GroupTable& g, std::size_t cap) { return member_lists(subgroups(g, cap)); },
        py::arg("group"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("automorphism_count",
        [](const GroupTable& g, std::size_t cap) { return automorphism_group(g, cap).size(); }, py::arg("group"),
        py::arg("max_order") = kDefaultMaxOrder);
  m.def("holomorph_size", [](const GroupTable& g, std::size_t cap) { return holomorph(g, cap).size(); },
        py::arg("group"), py::arg("max_order") = kDefaultMaxOrder);

  m.def(
      "galois_report",
      [](const SkewBrace& b, std::size_t cap) {
        const auto r = galois_report(b, cap);
        py::dict d;
        d["stable"] = r.count_circ_stable;
        d["subgroups"] = r.count_circ_subgroups;
        d["ratio"] = r.ratio.str();
        d["stable_list"] = member_lists(r.stable_list);
        return d;
      },
      py::arg("brace"), py::arg("max_order") = kDefaultMaxOrder);

  m.def(
      "brace_from_holomorph_regular",
      [](const GroupTable& g, const std::vector<std::vector<Element>>& perms) {
        std::vector<Permutation> el;
        for (const auto& p : perms) el.emplace_back(p);
        return brace_from_holomorph_regular(g, PermGroup::from_elements(g.order(), std::move(el)));
      },
      py::arg("group"), py::arg("permutations"));
  m.def(
      "brace_from_algebra",
      [](std::uint32_t p, std::size_t dim, const NilpotentAlgebra::Constants& c, std::size_t cap) {
        return brace_from_algebra(NilpotentAlgebra::make(p, dim, c, cap));
      },
      py::arg("p"), py::arg("dim"), py::arg("mul"), py::arg("max_order") = kDefaultMaxOrder);

  m.def(
      "fixture",
      [](const std::string& name, std::optional<std::uint32_t> p, std::optional<std::uint32_t> delta,
         std::optional<std::uint32_t> n, std::optional<std::uint32_t> b, std::size_t cap) {
        FixtureParams params;
        params.p = p;
        params.delta = delta;
        params.n = n;
        params.b = b;
        return fixture_brace(name, params, cap);
      },
      py::arg("name"), py::kw_only(), py::arg("p") = py::none(), py::arg("delta") = py::none(),
      py::arg("n") = py::none(), py::arg("b") = py::none(), py::arg("max_order") = kDefaultMaxOrder);
  m.def("fixture_names", &fixture_names);

  // Accepts a group or brace document; other kinds are turned into a brace.
  m.def("load_json", [](const std::string& text) -> py::object {
    json::Json j;
    try {
      j = json::Json::parse(text);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    switch (json::detect_kind(j)) {
      case json::Kind::Group:
        return py::cast(json::group_from_json(j));
      case json::Kind::Brace:
        return py::cast(json::brace_from_json(j));
      case json::Kind::FpfPair:
        return py::cast(brace_from_fpf_pair(json::fpf_pair_from_json(j)));
      case json::Kind::ExactFactorization:
        return py::cast(brace_from_exact_factorization(json::exact_factorization_from_json(j)).first);
      case json::Kind::Algebra:
        return py::cast(brace_from_algebra(json::algebra_from_json(j)));
      default:
        throw Error(ErrorCode::ParseError, std::string("unsupported document kind: ") + json::kind_name(json::detect_kind(j)));
    }
  });
}
