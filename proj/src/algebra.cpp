#include "skewbrace/algebra.hpp"

#include <algorithm>
#include <string>

namespace skewbrace {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t p) {
  std::uint64_t r = 1, b = base % p;
  for (; exp; exp >>= 1, b = b * b % p)
    if (exp & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

// Row-reduces `rows` over F_p in place and drops zero rows.
void row_reduce(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  if (rows.empty()) return;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [c](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    auto& pr = rows[rank];
    const std::uint32_t inv = pow_mod(pr[c], p - 2, p);
    for (auto& v : pr) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * pr[k]) % p);
    }
    ++rank;
  }
  rows.resize(rank);
}

}  // namespace

NilpotentAlgebra::NilpotentAlgebra(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> c)
    : p_(p), dim_(dim), size_(1), c_(std::move(c)) {
  for (std::size_t i = 0; i < dim_; ++i) size_ *= p_;
}

NilpotentAlgebra NilpotentAlgebra::make(std::uint32_t p, std::size_t dim, const Constants& constants,
                                        std::size_t max_order) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw Error(ErrorCode::BadParams, "p must be at most " + std::to_string(kMaxPrime));
  if (dim == 0 || dim > kMaxDim) throw Error(ErrorCode::BadParams, "dim must lie in 1.." + std::to_string(kMaxDim));
  std::size_t size = 1;
  for (std::size_t i = 0; i < dim; ++i) size *= p;
  if (size > max_order)
    throw Error(ErrorCode::OrderCapExceeded, "p^dim = " + std::to_string(size) + " exceeds cap " + std::to_string(max_order));

  if (constants.size() != dim) throw Error(ErrorCode::BadParams, "constants must be a dim x dim x dim array");
  std::vector<std::uint32_t> c(dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (constants[i].size() != dim) throw Error(ErrorCode::BadParams, "constants must be a dim x dim x dim array");
    for (std::size_t j = 0; j < dim; ++j) {
      if (constants[i][j].size() != dim) throw Error(ErrorCode::BadParams, "constants must be a dim x dim x dim array");
      for (std::size_t k = 0; k < dim; ++k) {
        const long long v = constants[i][j][k] % static_cast<long long>(p);
        c[(i * dim + j) * dim + k] = static_cast<std::uint32_t>(v < 0 ? v + p : v);
      }
    }
  }
  NilpotentAlgebra a(p, dim, std::move(c));

  auto basis = [dim](std::size_t i) {
    Vector v(dim, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const auto ei = basis(i), ej = basis(j), ek = basis(k);
        if (a.mul(a.mul(ei, ej), ek) != a.mul(ei, a.mul(ej, ek)))
          throw Error(ErrorCode::NotAssociative, "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                                                     std::to_string(k) + " differs from e" + std::to_string(i) + " (e" +
                                                     std::to_string(j) + " e" + std::to_string(k) + ")");
      }

  // A^{k+1} = A^k A; nilpotent iff the chain hits 0 within dim + 1 steps.
  std::vector<Vector> power;
  for (std::size_t i = 0; i < dim; ++i) power.push_back(basis(i));
  for (std::size_t step = 0; step < dim && !power.empty(); ++step) {
    std::vector<Vector> next;
    for (const auto& u : power)
      for (std::size_t j = 0; j < dim; ++j) next.push_back(a.mul(u, basis(j)));
    row_reduce(next, p);
    power.swap(next);
  }
  if (!power.empty()) throw Error(ErrorCode::NotNilpotent, "A^" + std::to_string(dim + 1) + " is nonzero");
  return a;
}

NilpotentAlgebra::Constants NilpotentAlgebra::constants() const {
  Constants out(dim_, std::vector<std::vector<long long>>(dim_, std::vector<long long>(dim_)));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out[i][j][k] = constant(i, j, k);
  return out;
}

NilpotentAlgebra::Vector NilpotentAlgebra::decode(Element x) const {
  Vector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i, x /= p_) v[i] = x % p_;
  return v;
}

Element NilpotentAlgebra::encode(const Vector& v) const {
  Element x = 0;
  for (std::size_t i = dim_; i-- > 0;) x = x * p_ + v[i];
  return x;
}

NilpotentAlgebra::Vector NilpotentAlgebra::add(const Vector& u, const Vector& v) const {
  Vector w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) w[i] = (u[i] + v[i]) % p_;
  return w;
}

NilpotentAlgebra::Vector NilpotentAlgebra::mul(const Vector& u, const Vector& v) const {
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      const std::uint64_t uv = std::uint64_t{u[i]} * v[j] % p_;
      for (std::size_t k = 0; k < dim_; ++k) acc[k] += uv * constant(i, j, k);
    }
  }
  Vector w(dim_);
  for (std::size_t k = 0; k < dim_; ++k) w[k] = static_cast<std::uint32_t>(acc[k] % p_);
  return w;
}

NilpotentAlgebra::Vector NilpotentAlgebra::circle(const Vector& u, const Vector& v) const {
  return add(add(u, v), mul(u, v));
}

GroupTable additive_group(const NilpotentAlgebra& a) {
  return GroupTable::from_operation(a.size(), [&](Element x, Element y) { return a.encode(a.add(a.decode(x), a.decode(y))); });
}

GroupTable circle_group(const NilpotentAlgebra& a) {
  return GroupTable::from_operation(a.size(), [&](Element x, Element y) { return a.encode(a.circle(a.decode(x), a.decode(y))); });
}

std::vector<Subgroup> left_ideals(const NilpotentAlgebra& a, std::size_t max_order) {
  auto all = subgroups(additive_group(a), max_order);
  std::vector<NilpotentAlgebra::Vector> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    NilpotentAlgebra::Vector e(a.dim(), 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  std::erase_if(all, [&](const Subgroup& s) {
    for (Element x : s.members()) {
      const auto v = a.decode(x);
      for (const auto& e : basis)
        if (!s.contains(a.encode(a.mul(e, v)))) return true;
    }
    return false;
  });
  return all;
}

SkewBrace brace_from_algebra(const NilpotentAlgebra& a) { return SkewBrace::make(additive_group(a), circle_group(a)); }

}  // namespace skewbrace
