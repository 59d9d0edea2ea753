#include "skewbrace/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace skewbrace {

namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

std::size_t checked_power(std::uint32_t p, std::size_t dim, std::size_t max_order = kDefaultMaxOrder) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= p;
    if (n > max_order)
      throw Error(ErrorCode::OrderCapExceeded, std::to_string(p) + "^" + std::to_string(dim) + " exceeds cap " +
                                                   std::to_string(max_order));
  }
  return n;
}

}  // namespace

GroupTable heisenberg(std::uint32_t p) {
  require_prime(p);
  const auto n = checked_power(p, 3);
  auto dec = [p](Element x) { return std::array<std::uint32_t, 3>{x % p, (x / p) % p, x / (p * p)}; };
  return GroupTable::from_operation(n, [&](Element x, Element y) {
    const auto u = dec(x), v = dec(y);
    const std::uint32_t a = (u[0] + v[0]) % p;
    const std::uint32_t b = (u[1] + v[1]) % p;
    const std::uint32_t c = (u[2] + v[2] + u[0] * v[1]) % p;
    return a + b * p + c * p * p;
  });
}

GroupTable elementary_abelian(std::uint32_t p, std::size_t dim) {
  require_prime(p);
  const auto n = checked_power(p, dim);
  return GroupTable::from_operation(n, [&](Element x, Element y) {
    Element out = 0, scale = 1;
    for (std::size_t i = 0; i < dim; ++i, x /= p, y /= p, scale *= p) out += ((x % p + y % p) % p) * scale;
    return out;
  });
}

NilpotentAlgebra algebra_a35(std::uint32_t p) {
  NilpotentAlgebra::Constants c(3, std::vector<std::vector<long long>>(3, std::vector<long long>(3, 0)));
  c[0][1][2] = 1;   // xy = z
  c[1][0][2] = -1;  // yx = -z
  return NilpotentAlgebra::make(p, 3, c);
}

NilpotentAlgebra algebra_a34(std::uint32_t p, std::uint32_t delta) {
  if (delta >= p) throw Error(ErrorCode::BadParams, "delta must lie in 0..p-1");
  NilpotentAlgebra::Constants c(3, std::vector<std::vector<long long>>(3, std::vector<long long>(3, 0)));
  c[0][0][2] = 1;      // x^2 = z
  c[1][1][2] = delta;  // y^2 = delta z
  c[0][1][2] = 1;      // xy = z
  return NilpotentAlgebra::make(p, 3, c);
}

SkewBrace rump8() {
  // Addition table in the order e, c, c^2, c^3, s, sc, sc^2, sc^3.
  const std::vector<std::vector<long long>> sum = {
      {0, 1, 2, 3, 4, 5, 6, 7},  //
      {1, 0, 6, 5, 7, 3, 2, 4},  //
      {2, 6, 0, 4, 3, 7, 1, 5},  //
      {3, 5, 4, 0, 2, 1, 7, 6},  //
      {4, 7, 3, 2, 0, 6, 5, 1},  //
      {5, 3, 7, 1, 6, 0, 4, 2},  //
      {6, 2, 1, 7, 5, 4, 0, 3},  //
      {7, 4, 5, 6, 1, 2, 3, 0},
  };
  // s^i c^j sits at 4i + j; c^j s = s c^-j. The circle product is the
  // opposite one, x o y = y x: with x o y = x y the addition table fails the
  // left brace axiom (L_c is not additive).
  auto d4_mul = [](Element x, Element y) {
    const Element i = x / 4, j = x % 4, k = y / 4, l = y % 4;
    const Element twisted = k ? (4 - j) % 4 : j;
    return ((i + k) % 2) * 4 + (twisted + l) % 4;
  };
  auto circ = GroupTable::from_operation(8, [&](Element x, Element y) { return d4_mul(y, x); });
  return SkewBrace::make(GroupTable::validate(sum), std::move(circ));
}

FpfPair heis_fpf_pair(std::uint32_t p) {
  auto gamma = elementary_abelian(p, 3);
  auto g = heisenberg(p);
  std::vector<Element> f_l(g.order()), f_r(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const Element a = x % p, bc = x / p;
    f_l[x] = bc * p;            // (0, b, c)
    f_r[x] = (p - a) % p;       // (-a, 0, 0)
  }
  return FpfPair::make(std::move(gamma), std::move(g), std::move(f_l), std::move(f_r));
}

std::vector<std::vector<Element>> symmetric_group_elements(std::size_t n) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GroupTable symmetric_group(std::size_t n) {
  const auto el = symmetric_group_elements(n);
  std::map<std::vector<Element>, Element> index;
  for (Element i = 0; i < el.size(); ++i) index.emplace(el[i], i);
  return GroupTable::from_operation(el.size(), [&](Element x, Element y) {
    std::vector<Element> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = el[x][el[y][i]];
    return index.at(comp);
  });
}

ExactFactorization sn_factorization(std::size_t n, std::size_t max_order) {
  if (n < 2) throw Error(ErrorCode::BadParams, "n must be at least 2");
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    fact *= i;
    if (fact > max_order)
      throw Error(ErrorCode::OrderCapExceeded, std::to_string(n) + "! exceeds cap " + std::to_string(max_order));
  }
  const auto el = symmetric_group_elements(n);
  auto g = symmetric_group(n);
  std::vector<Element> even, transposition{0};
  for (Element x = 0; x < el.size(); ++x) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += el[x][i] > el[x][j] ? 1 : 0;
    if (inversions % 2 == 0) even.push_back(x);
    if (inversions == 1 && el[x][0] == 1) transposition.push_back(x);
  }
  auto h = Subgroup::checked(g, std::move(even));
  auto j = Subgroup::checked(g, std::move(transposition));
  return ExactFactorization::make(std::move(g), std::move(h), std::move(j));
}

std::uint32_t primitive_root(std::uint32_t p) {
  require_prime(p);
  if (p == 2) return 1;
  for (std::uint32_t r = 2; r < p; ++r) {
    std::uint32_t x = r, k = 1;
    while (x != 1) {
      x = x * r % p;
      ++k;
    }
    if (k == p - 1) return r;
  }
  return 1;
}

GroupTable zp_semidirect(std::uint32_t p, std::optional<std::uint32_t> b) {
  require_prime(p);
  const std::uint32_t base = b.value_or(primitive_root(p));
  if (base == 0 || base >= p) throw Error(ErrorCode::BadParams, "b must be a unit mod p in 1..p-1");
  std::vector<std::uint32_t> powers{1};
  for (std::uint32_t x = base % p; x != 1; x = x * base % p) powers.push_back(x);
  const std::size_t k = powers.size();
  if (k < 2) throw Error(ErrorCode::BadParams, "b must have multiplicative order greater than 1");
  if (p * k > kDefaultMaxOrder) throw Error(ErrorCode::OrderCapExceeded, "p * ord(b) exceeds cap");
  return GroupTable::from_operation(p * k, [&](Element x, Element y) {
    const Element r = x % p, s = x / p, r2 = y % p, s2 = y / p;
    return (r + powers[s] * r2) % p + p * static_cast<Element>((s + s2) % k);
  });
}

ExactFactorization zp_hol_factorization(std::uint32_t p, std::optional<std::uint32_t> b) {
  auto g = zp_semidirect(p, b);
  std::vector<Element> h, j;
  for (Element r = 0; r < p; ++r) h.push_back(r);
  for (Element s = 0; s * p < g.order(); ++s) j.push_back(s * p);
  auto hs = Subgroup::checked(g, std::move(h));
  auto js = Subgroup::checked(g, std::move(j));
  return ExactFactorization::make(std::move(g), std::move(hs), std::move(js));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"a35",   "a34",      "heisenberg",      "rump8",
                                                 "heis_fpf", "sn_factorization", "zp_hol"};
  return names;
}

namespace {

std::uint32_t need(const std::optional<std::uint32_t>& v, const char* what, std::string_view fixture) {
  if (!v) throw Error(ErrorCode::BadParams, std::string(fixture) + " needs parameter " + what);
  return *v;
}

}  // namespace

Fixture builtin_fixture(std::string_view name, const FixtureParams& params, std::size_t max_order) {
  if (name == "a35") return algebra_a35(need(params.p, "p", name));
  // delta defaults to 0.
  if (name == "a34") return algebra_a34(need(params.p, "p", name), params.delta.value_or(0));
  if (name == "heisenberg") return heisenberg(need(params.p, "p", name));
  if (name == "rump8") return rump8();
  if (name == "heis_fpf") return brace_from_fpf_pair(heis_fpf_pair(need(params.p, "p", name)));
  if (name == "sn_factorization")
    return brace_from_exact_factorization(sn_factorization(need(params.n, "n", name), max_order)).first;
  if (name == "zp_hol") return brace_from_exact_factorization(zp_hol_factorization(need(params.p, "p", name), params.b)).first;
  throw Error(ErrorCode::UnknownFixture, std::string(name));
}

SkewBrace fixture_brace(std::string_view name, const FixtureParams& params, std::size_t max_order) {
  auto fx = builtin_fixture(name, params, max_order);
  if (auto* b = std::get_if<SkewBrace>(&fx)) return std::move(*b);
  if (auto* g = std::get_if<GroupTable>(&fx)) return trivial_brace(*g);
  return brace_from_algebra(std::get<NilpotentAlgebra>(fx));
}

}  // namespace skewbrace
