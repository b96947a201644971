#include "gralg/magma_algebra.hpp"

#include "gralg/kernels.hpp"

#include <limits>

namespace gralg {

MagmaAlgebra::MagmaAlgebra(const FiniteField& field, std::uint32_t n,
                           const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& product)
    : field_(field), n_(n) {
  if (n > 4096) throw CeilingExceeded("magma algebra basis", n, 4096);
  table_.resize(std::size_t{n} * n);
  left_inverse_.assign(std::size_t{n} * n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint32_t k = product(i, j);
      if (k >= n) throw DomainError("magma product out of range");
      table_[std::size_t{i} * n + j] = k;
      auto& slot = left_inverse_[std::size_t{i} * n + k];
      if (slot != n) throw DomainError("left multiplication is not a bijection");
      slot = j;
    }
}

MagmaAlgebra::Vec MagmaAlgebra::basis(std::uint32_t i, FiniteField::Elem c) const {
  Vec v = zero();
  v.at(i) = c;
  return v;
}

MagmaAlgebra::Vec MagmaAlgebra::add(const Vec& a, const Vec& b) const {
  Vec out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = field_.add(a[i], b[i]);
  return out;
}

MagmaAlgebra::Vec MagmaAlgebra::sub(const Vec& a, const Vec& b) const {
  Vec out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = field_.sub(a[i], b[i]);
  return out;
}

MagmaAlgebra::Vec MagmaAlgebra::scale(FiniteField::Elem c, const Vec& a) const {
  Vec out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = field_.mul(c, a[i]);
  return out;
}

MagmaAlgebra::Vec MagmaAlgebra::multiply_naive(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j)
      if (b[j] != 0) {
        auto& slot = out[basis_product(i, j)];
        slot = field_.add(slot, field_.mul(a[i], b[j]));
      }
  }
  return out;
}

MagmaAlgebra::Vec MagmaAlgebra::multiply(const Vec& a, const Vec& b) const {
  const std::uint32_t p = field_.p();
  const unsigned k = field_.k();
  // b split into k digit planes over F_p; products land in planes 0..2k-2.
  std::vector<std::vector<std::uint32_t>> bplanes(k, std::vector<std::uint32_t>(n_));
  for (std::uint32_t j = 0; j < n_; ++j)
    for (unsigned r = 0; r < k; ++r) bplanes[r][j] = field_.digit(b[j], r);
  std::vector<std::vector<std::uint32_t>> acc(2 * k - 1, std::vector<std::uint32_t>(n_, 0));
  std::vector<std::uint32_t> pending(2 * k - 1, 0);
  const std::uint64_t sq = std::uint64_t{p - 1} * (p - 1);
  const std::uint64_t limit = (std::uint64_t{std::numeric_limits<std::uint32_t>::max()} - p) / sq;

  for (std::uint32_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    const std::span<const std::uint32_t> perm(&left_inverse_[std::size_t{i} * n_], n_);
    for (unsigned r = 0; r < k; ++r) {
      const std::uint32_t c = field_.digit(a[i], r);
      if (c == 0) continue;
      for (unsigned s = 0; s < k; ++s) {
        if (pending[r + s] == limit) {
          kernels::reduce_mod(acc[r + s], p);
          pending[r + s] = 0;
        }
        kernels::gather_axpy(acc[r + s], bplanes[s], perm, c);
        ++pending[r + s];
      }
    }
  }
  for (auto& plane : acc) kernels::reduce_mod(plane, p);
  // theta^k = -(f_0 + ... + f_{k-1} theta^{k-1}).
  const auto& f = field_.modulus();
  for (unsigned d = 2 * k - 2; d >= k && d > 0; --d)
    for (std::uint32_t j = 0; j < n_; ++j) {
      const std::uint32_t c = acc[d][j];
      if (c == 0) continue;
      for (unsigned r = 0; r < k; ++r)
        acc[d - k + r][j] = static_cast<std::uint32_t>((acc[d - k + r][j] + std::uint64_t{p - f[r]} * c) % p);
      acc[d][j] = 0;
    }
  Vec out(n_);
  std::vector<std::uint32_t> digits(k);
  for (std::uint32_t j = 0; j < n_; ++j) {
    for (unsigned r = 0; r < k; ++r) digits[r] = acc[r][j];
    out[j] = field_.from_digits(digits);
  }
  return out;
}

}  // namespace gralg

namespace gralg {

void EchelonBasis::reduce(std::vector<FiniteField::Elem>& v) const {
  if (v.size() != n_) throw DomainError("vector length does not match the ambient dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto c = v[pivots_[i]];
    if (c == 0) continue;
    const auto& row = rows_[i];
    for (std::uint32_t j = pivots_[i]; j < n_; ++j)
      if (row[j] != 0) v[j] = field_->sub(v[j], field_->mul(c, row[j]));
  }
}

bool EchelonBasis::insert(std::vector<FiniteField::Elem> v) {
  reduce(v);
  std::uint32_t pivot = 0;
  while (pivot < n_ && v[pivot] == 0) ++pivot;
  if (pivot == n_) return false;
  const auto inv = field_->inv(v[pivot]);
  for (std::uint32_t j = pivot; j < n_; ++j) v[j] = field_->mul(v[j], inv);
  // Keep earlier rows reduced at the new pivot so reduce() stays a single pass.
  for (auto& row : rows_) {
    const auto c = row[pivot];
    if (c == 0) continue;
    for (std::uint32_t j = pivot; j < n_; ++j)
      if (v[j] != 0) row[j] = field_->sub(row[j], field_->mul(c, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(std::vector<FiniteField::Elem> v) const {
  reduce(v);
  for (auto c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace gralg
