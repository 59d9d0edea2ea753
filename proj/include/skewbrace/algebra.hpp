#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

/// Nilpotent associative F_p-algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k.
///
/// Elements of F_p^d are indexed base-p little-endian: the coefficient of e_0
/// is the least significant digit, so the zero vector has index 0.
class NilpotentAlgebra {
 public:
  using Vector = std::vector<std::uint32_t>;
  using Constants = std::vector<std::vector<std::vector<long long>>>;

  inline static constexpr std::uint32_t kMaxPrime = 13;
  inline static constexpr std::size_t kMaxDim = 4;

  /// Constants are reduced mod p. Throws NotPrime, BadParams, NotAssociative,
  /// NotNilpotent, or OrderCapExceeded when p^dim exceeds `max_order`.
  static NilpotentAlgebra make(std::uint32_t p, std::size_t dim, const Constants& constants,
                               std::size_t max_order = kDefaultMaxOrder);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return size_; }
  std::uint32_t constant(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Constants constants() const;

  Vector decode(Element x) const;
  Element encode(const Vector& v) const;

  Vector add(const Vector& u, const Vector& v) const;
  Vector mul(const Vector& u, const Vector& v) const;
  /// u o v = u + v + uv.
  Vector circle(const Vector& u, const Vector& v) const;

 private:
  NilpotentAlgebra(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> c);

  std::uint32_t p_ = 0;
  std::size_t dim_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> c_;
};

bool is_prime(std::uint32_t n) noexcept;

GroupTable additive_group(const NilpotentAlgebra& a);
GroupTable circle_group(const NilpotentAlgebra& a);

/// Additive subgroups closed under left multiplication by every basis vector.
std::vector<Subgroup> left_ideals(const NilpotentAlgebra& a, std::size_t max_order = kDefaultMaxOrder);

/// (A, +, o).
SkewBrace brace_from_algebra(const NilpotentAlgebra& a);

}  // namespace skewbrace
