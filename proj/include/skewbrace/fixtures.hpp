#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewbrace/algebra.hpp"
#include "skewbrace/constructors.hpp"

namespace skewbrace {

/// Heis_3(F_p) on F_p^3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
/// Vectors are indexed a + b p + c p^2.
GroupTable heisenberg(std::uint32_t p);

/// (F_p^d, +) with little-endian base-p indexing.
GroupTable elementary_abelian(std::uint32_t p, std::size_t dim);

/// xy = z, yx = -z, all other basis products zero (basis x, y, z).
NilpotentAlgebra algebra_a35(std::uint32_t p);
/// x^2 = z, y^2 = delta z, xy = z, yx = 0, z annihilates everything.
NilpotentAlgebra algebra_a34(std::uint32_t p, std::uint32_t delta);

/// Order-8 left brace with additive group C_2^3 and circle group D_4.
/// Carrier order: e, c, c^2, c^3, s, sc, sc^2, sc^3 with c^4 = s^2 = e, cs = sc^3.
/// The circle product is the opposite of that presentation's product.
SkewBrace rump8();
inline constexpr std::array<std::string_view, 8> kRump8Labels = {"e", "c", "c2", "c3", "s", "sc", "sc2", "sc3"};
/// F_2^3 labels abc of the carrier elements, in carrier order.
inline constexpr std::array<std::string_view, 8> kRump8Binary = {"000", "011", "001", "101",
                                                                  "100", "110", "010", "111"};

/// Gamma = (F_p^3, +), G = Heis_3(F_p), f_l(a,b,c) = (0,b,c), f_r(a,b,c) = (-a,0,0).
FpfPair heis_fpf_pair(std::uint32_t p);

/// Symmetric group on n points; permutations indexed in lexicographic order of
/// their image arrays (identity first).
GroupTable symmetric_group(std::size_t n);
std::vector<std::vector<Element>> symmetric_group_elements(std::size_t n);
/// S_n = A_n J with J generated by the transposition (0 1).
ExactFactorization sn_factorization(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// Z_p x| <b> with delta a delta^-1 = a^b; element a^r delta^s stored at r + p s.
/// b defaults to the least primitive root mod p.
GroupTable zp_semidirect(std::uint32_t p, std::optional<std::uint32_t> b = std::nullopt);
/// H = Z_p, J = <delta>.
ExactFactorization zp_hol_factorization(std::uint32_t p, std::optional<std::uint32_t> b = std::nullopt);

std::uint32_t primitive_root(std::uint32_t p);

struct FixtureParams {
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> delta;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> b;
};

using Fixture = std::variant<SkewBrace, GroupTable, NilpotentAlgebra>;

/// Names: a35, a34, heisenberg, rump8, heis_fpf, sn_factorization, zp_hol.
/// Throws UnknownFixture or BadParams.
Fixture builtin_fixture(std::string_view name, const FixtureParams& params,
                        std::size_t max_order = kDefaultMaxOrder);

/// The fixture as a brace: algebras become (A, +, o), groups the trivial brace.
SkewBrace fixture_brace(std::string_view name, const FixtureParams& params,
                        std::size_t max_order = kDefaultMaxOrder);

const std::vector<std::string>& fixture_names();

}  // namespace skewbrace
