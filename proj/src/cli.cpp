#include "skewbrace/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "skewbrace/fixtures.hpp"
#include "skewbrace/json_io.hpp"

namespace skewbrace::cli {

namespace {

using json::Json;

// Raised for problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string fixture;
  std::optional<std::uint32_t> p, delta, n, b;
  std::string format = "json";
  std::size_t max_order = kDefaultMaxOrder;
  std::string of = "star";
  std::string target;
  std::string holomorph_regular, exact_factorization, fpf, algebra;
};

using Loaded = std::variant<GroupTable, PermGroup, SkewBrace, FpfPair, ExactFactorization, NilpotentAlgebra>;

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Loaded load_json(const Json& j) {
  switch (json::detect_kind(j)) {
    case json::Kind::Group: return json::group_from_json(j);
    case json::Kind::PermGroup: return json::perm_group_from_json(j);
    case json::Kind::Brace: return json::brace_from_json(j);
    case json::Kind::FpfPair: return json::fpf_pair_from_json(j);
    case json::Kind::ExactFactorization: return json::exact_factorization_from_json(j);
    case json::Kind::Algebra: return json::algebra_from_json(j);
    case json::Kind::Unknown: break;
  }
  throw UsageError("unrecognised JSON object");
}

FixtureParams params_of(const Options& o) { return {o.p, o.delta, o.n, o.b}; }

Loaded load_input(const Options& o) {
  if (!o.in.empty() && !o.fixture.empty()) throw UsageError("give either --in or --fixture, not both");
  if (!o.in.empty()) return load_json(read_json_file(o.in));
  if (!o.fixture.empty()) {
    const auto params = params_of(o);
    if (o.fixture == "sn_factorization") return sn_factorization(params.n.value_or(0), o.max_order);
    if (o.fixture == "zp_hol") {
      if (!params.p) throw Error(ErrorCode::BadParams, "zp_hol needs parameter p");
      return zp_hol_factorization(*params.p, params.b);
    }
    if (o.fixture == "heis_fpf") {
      if (!params.p) throw Error(ErrorCode::BadParams, "heis_fpf needs parameter p");
      return heis_fpf_pair(*params.p);
    }
    auto fx = builtin_fixture(o.fixture, params, o.max_order);
    return std::visit([](auto&& v) -> Loaded { return std::move(v); }, std::move(fx));
  }
  throw UsageError("an input is required: --in FILE or --fixture NAME");
}

SkewBrace as_brace(const Loaded& l) {
  struct {
    SkewBrace operator()(const GroupTable& g) const { return trivial_brace(g); }
    SkewBrace operator()(const PermGroup& pg) const { return trivial_brace(pg.cayley_table()); }
    SkewBrace operator()(const SkewBrace& b) const { return b; }
    SkewBrace operator()(const FpfPair& p) const { return brace_from_fpf_pair(p); }
    SkewBrace operator()(const ExactFactorization& ef) const { return brace_from_exact_factorization(ef).first; }
    SkewBrace operator()(const NilpotentAlgebra& a) const { return brace_from_algebra(a); }
  } visitor;
  return std::visit(visitor, l);
}

GroupTable as_group(const Loaded& l, const std::string& of) {
  if (of != "star" && of != "circ") throw UsageError("--of must be star or circ");
  if (auto* g = std::get_if<GroupTable>(&l)) return *g;
  if (auto* pg = std::get_if<PermGroup>(&l)) return pg->cayley_table();
  auto b = as_brace(l);
  return of == "star" ? b.star() : b.circ();
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string members_text(const Subgroup& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.members().size(); ++i) os << (i ? ", " : "") << s.members()[i];
  os << '}';
  return os.str();
}

std::string fingerprint_text(const GroupTable& g) {
  const auto f = fingerprint(g);
  std::ostringstream os;
  os << "order " << f.order << ", " << (f.abelian ? "abelian" : "nonabelian") << ", exponent " << f.exponent
     << ", center " << f.center_size << ", element orders [";
  bool first = true;
  for (const auto& [ord, count] : f.order_histogram) {
    os << (first ? "" : " ") << ord << ":" << count;
    first = false;
  }
  os << ']';
  return os.str();
}

void print_subgroup_list(std::ostream& out, const std::string& title, const std::vector<Subgroup>& list) {
  out << title << ": " << list.size() << '\n';
  for (const auto& s : list) out << "  " << std::setw(4) << s.size() << "  " << members_text(s) << '\n';
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto loaded = load_input(o);
  static constexpr const char* kinds[] = {"group", "perm_group", "brace", "fpf_pair", "exact_factorization", "algebra"};
  const char* kind = kinds[loaded.index()];
  const std::size_t order = std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PermGroup>) return v.size();
        else if constexpr (std::is_same_v<T, FpfPair> || std::is_same_v<T, ExactFactorization>) return v.group().order();
        else if constexpr (std::is_same_v<T, NilpotentAlgebra>) return v.size();
        else return v.order();
      },
      loaded);
  if (o.format == "text") {
    out << "valid " << kind << " of order " << order << '\n';
  } else {
    Json j;
    j["valid"] = true;
    j["kind"] = kind;
    j["order"] = order;
    emit(out, j);
  }
  return 0;
}

int cmd_subgroups(const Options& o, std::ostream& out) {
  const auto g = as_group(load_input(o), o.of);
  const auto subs = subgroups(g, o.max_order);
  if (o.format == "text") {
    out << fingerprint_text(g) << '\n';
    print_subgroup_list(out, "subgroups", subs);
  } else {
    Json j;
    j["order"] = g.order();
    j["count"] = subs.size();
    j["subgroups"] = json::subgroup_list_to_json(subs);
    emit(out, j);
  }
  return 0;
}

int cmd_brace_build(const Options& o, std::ostream& out) {
  const int sources = !o.holomorph_regular.empty() + !o.exact_factorization.empty() + !o.fpf.empty() +
                      !o.algebra.empty() + !o.fixture.empty();
  if (sources != 1)
    throw UsageError("give exactly one of --holomorph-regular, --exact-factorization, --fpf, --algebra, --fixture");

  std::optional<SkewBrace> brace;
  if (!o.holomorph_regular.empty()) {
    if (o.in.empty()) throw UsageError("--holomorph-regular needs the additive group via --in");
    const auto g = json::group_from_json(read_json_file(o.in));
    brace = brace_from_holomorph_regular(g, json::perm_group_from_json(read_json_file(o.holomorph_regular)));
  } else if (!o.exact_factorization.empty()) {
    brace = brace_from_exact_factorization(json::exact_factorization_from_json(read_json_file(o.exact_factorization))).first;
  } else if (!o.fpf.empty()) {
    brace = brace_from_fpf_pair(json::fpf_pair_from_json(read_json_file(o.fpf)));
  } else if (!o.algebra.empty()) {
    brace = brace_from_algebra(json::algebra_from_json(read_json_file(o.algebra)));
  } else {
    brace = as_brace(load_input(o));
  }

  if (o.format == "text") {
    out << "brace of order " << brace->order() << '\n'
        << "  additive group: " << fingerprint_text(brace->star()) << '\n'
        << "  circle group:   " << fingerprint_text(brace->circ()) << '\n';
  } else {
    emit(out, json::to_json(*brace));
  }
  return 0;
}

int cmd_stable(const Options& o, std::ostream& out) {
  const auto b = as_brace(load_input(o));
  const auto list = circ_stable_subgroups(b, o.max_order);
  if (o.format == "text") {
    print_subgroup_list(out, "circ-stable subgroups", list);
  } else {
    Json j;
    j["count"] = list.size();
    j["stable_list"] = json::subgroup_list_to_json(list);
    emit(out, j);
  }
  return 0;
}

int cmd_ideals(const Options& o, std::ostream& out) {
  const auto loaded = load_input(o);
  const auto list = std::holds_alternative<NilpotentAlgebra>(loaded)
                        ? left_ideals(std::get<NilpotentAlgebra>(loaded), o.max_order)
                        : left_ideals(as_brace(loaded), o.max_order);
  if (o.format == "text") {
    print_subgroup_list(out, "left ideals", list);
  } else {
    Json j;
    j["count"] = list.size();
    j["ideals"] = json::subgroup_list_to_json(list);
    emit(out, j);
  }
  return 0;
}

int cmd_report(const Options& o, std::ostream& out) {
  const auto report = galois_report(as_brace(load_input(o)), o.max_order);
  if (o.format == "text") {
    out << "circ-stable subgroups: " << report.count_circ_stable << '\n'
        << "circle-group subgroups: " << report.count_circ_subgroups << '\n'
        << "ratio: " << report.ratio.str() << '\n';
    print_subgroup_list(out, "stable list", report.stable_list);
  } else {
    emit(out, json::to_json(report));
  }
  return 0;
}

// One reproduction check: a named count with its expected and computed values.
struct Check {
  std::string target;
  Json params;
  std::string quantity;
  std::uint64_t expected;
  std::uint64_t computed;
  bool pass() const { return expected == computed; }
};

std::size_t divisor_count(std::size_t k) {
  std::size_t c = 0;
  for (std::size_t d = 1; d <= k; ++d) c += k % d == 0 ? 1 : 0;
  return c;
}

std::vector<Check> reproduce_target(const std::string& target, const Options& o) {
  std::vector<Check> checks;
  auto ps = [&](std::vector<std::uint32_t> defaults) { return o.p ? std::vector<std::uint32_t>{*o.p} : defaults; };

  if (target == "heis-subgroups") {
    for (auto p : ps({3, 5, 7})) {
      const auto count = subgroups(heisenberg(p), o.max_order).size();
      checks.push_back({target, {{"p", p}}, "subgroups", 2ULL * p * p + 2ULL * p + 4, count});
    }
  } else if (target == "a35-ideals") {
    for (auto p : ps({3, 5}))
      checks.push_back({target, {{"p", p}}, "left_ideals", p + 4ULL, left_ideals(algebra_a35(p), o.max_order).size()});
  } else if (target == "a34-ideals") {
    for (auto p : ps({3, 5})) {
      std::vector<std::uint32_t> deltas;
      if (o.delta) deltas = {*o.delta};
      else
        for (std::uint32_t d = 0; d < (p == 3 ? 3U : 2U); ++d) deltas.push_back(d);
      for (auto d : deltas)
        checks.push_back({target, {{"p", p}, {"delta", d}}, "left_ideals", p + 4ULL,
                          left_ideals(algebra_a34(p, d), o.max_order).size()});
    }
  } else if (target == "rump8") {
    const auto r = galois_report(rump8(), o.max_order);
    checks.push_back({target, Json::object(), "stable", 3, r.count_circ_stable});
    checks.push_back({target, Json::object(), "subgroups", 10, r.count_circ_subgroups});
  } else if (target == "heis-fpf") {
    for (auto p : ps({3, 5})) {
      const auto r = galois_report(brace_from_fpf_pair(heis_fpf_pair(p)), o.max_order);
      checks.push_back({target, {{"p", p}}, "stable", 2ULL * p + 4, r.count_circ_stable});
      checks.push_back({target, {{"p", p}}, "subgroups", 2ULL * p * p + 2ULL * p + 4, r.count_circ_subgroups});
    }
  } else if (target == "sn") {
    const std::uint32_t n = o.n.value_or(5);
    const auto ef = sn_factorization(n, o.max_order);
    const auto b = brace_from_exact_factorization(ef).first;
    const auto stable = circ_stable_subgroups(b, o.max_order);
    const std::vector<Subgroup> expected = {Subgroup::checked(ef.group(), {0}), ef.left(),
                                            Subgroup::checked(ef.group(), [&] {
                                              std::vector<Element> all(ef.group().order());
                                              std::iota(all.begin(), all.end(), Element{0});
                                              return all;
                                            }())};
    checks.push_back({target, {{"n", n}}, "stable", 3, stable.size()});
    checks.push_back({target, {{"n", n}}, "stable_set_matches", 1, stable == expected ? 1U : 0U});
  } else if (target == "zp-hol") {
    for (auto p : ps({7})) {
      const auto ef = zp_hol_factorization(p, o.b);
      const auto b = brace_from_exact_factorization(ef).first;
      const auto k = ef.right().size();
      checks.push_back({target, {{"p", p}}, "stable", 1 + divisor_count(k), circ_stable_subgroups(b, o.max_order).size()});
    }
  } else {
    throw UsageError("unknown reproduce target: " + target);
  }
  return checks;
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> t = {"heis-subgroups", "a35-ideals", "a34-ideals", "rump8",
                                             "heis-fpf",       "sn",         "zp-hol"};
  return t;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  std::vector<Check> checks;
  if (o.target == "all") {
    for (const auto& t : reproduce_targets()) {
      Options defaults;
      defaults.max_order = o.max_order;
      auto c = reproduce_target(t, defaults);
      checks.insert(checks.end(), c.begin(), c.end());
    }
  } else {
    checks = reproduce_target(o.target, o);
  }

  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c.pass();

  if (o.format == "text") {
    out << std::left << std::setw(16) << "target" << std::setw(22) << "params" << std::setw(20) << "quantity"
        << std::right << std::setw(10) << "expected" << std::setw(10) << "computed" << "  result\n";
    for (const auto& c : checks)
      out << std::left << std::setw(16) << c.target << std::setw(22) << c.params.dump() << std::setw(20) << c.quantity
          << std::right << std::setw(10) << c.expected << std::setw(10) << c.computed << "  "
          << (c.pass() ? "PASS" : "FAIL") << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json j;
      j["target"] = c.target;
      j["params"] = c.params;
      j["quantity"] = c.quantity;
      j["expected"] = c.expected;
      j["computed"] = c.computed;
      j["result"] = c.pass() ? "PASS" : "FAIL";
      arr.push_back(j);
    }
    Json j;
    j["checks"] = arr;
    j["all_pass"] = all_pass;
    emit(out, j);
  }
  return all_pass ? 0 : 1;
}

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--in", o.in, "Input JSON file");
  cmd->add_option("--fixture", o.fixture, "Built-in fixture name");
  cmd->add_option("--p", o.p, "Prime parameter");
  cmd->add_option("--delta", o.delta, "delta parameter of a34");
  cmd->add_option("--n", o.n, "Degree parameter of sn_factorization");
  cmd->add_option("--b", o.b, "Generator of Delta for zp_hol");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Skew left braces, regular subgroups of holomorphs and circ-stable subgroups"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-order", o.max_order, "Group-order cap for enumeration")->envname("BRACE_MAX_ORDER");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    cmd->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
    return cmd;
  };

  add_input_options(sub("validate", "Validate an object file or fixture", cmd_validate), o);
  auto* subs_cmd = sub("subgroups", "List all subgroups", cmd_subgroups);
  add_input_options(subs_cmd, o);
  subs_cmd->add_option("--of", o.of, "Which brace group: star or circ");
  add_input_options(sub("stable", "List circ-stable subgroups of a brace", cmd_stable), o);
  add_input_options(sub("ideals", "List left ideals of an algebra or brace", cmd_ideals), o);
  add_input_options(sub("report", "Galois-correspondence report of a brace", cmd_report), o);

  auto* brace_cmd = app.add_subcommand("brace", "Brace construction");
  brace_cmd->fallthrough();
  brace_cmd->require_subcommand(1);
  auto* build = brace_cmd->add_subcommand("build", "Build a brace from a source object");
  build->fallthrough();
  add_input_options(build, o);
  build->add_option("--holomorph-regular", o.holomorph_regular, "Regular subgroup of Hol(G) as permutation-group JSON");
  build->add_option("--exact-factorization", o.exact_factorization, "Exact factorization JSON");
  build->add_option("--fpf", o.fpf, "Fixed point free pair JSON");
  build->add_option("--algebra", o.algebra, "Nilpotent algebra JSON");
  build->callback([&] { action = [&] { return cmd_brace_build(o, out); }; });

  auto* repro = sub("reproduce", "Recompute the reference counts and compare", cmd_reproduce);
  repro->add_option("target", o.target, "Target name or 'all'")->required();
  repro->add_option("--p", o.p, "Prime parameter");
  repro->add_option("--delta", o.delta, "delta parameter");
  repro->add_option("--n", o.n, "Degree parameter");
  repro->add_option("--b", o.b, "Generator of Delta for zp-hol");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::UnknownFixture ? 2 : 1;
  }
}

}  // namespace skewbrace::cli
