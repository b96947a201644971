#pragma once

// F_q-algebras with a basis closed under multiplication (group and loop algebras).
// Products run plane by plane over F_p using the gather-axpy kernel.

#include "gralg/finite_field.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace gralg {

class MagmaAlgebra {
 public:
  using Vec = std::vector<FiniteField::Elem>;

  /// `product(i, j)` is the basis index of b_i * b_j; every left multiplication must be a
  /// bijection (true for groups and loops). Throws CeilingExceeded above 4096 basis elements.
  MagmaAlgebra(const FiniteField& field, std::uint32_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& product);

  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return n_; }
  std::uint32_t basis_product(std::uint32_t i, std::uint32_t j) const { return table_[std::size_t{i} * n_ + j]; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  Vec zero() const { return Vec(n_, 0); }
  Vec basis(std::uint32_t i, FiniteField::Elem c = 1) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec scale(FiniteField::Elem c, const Vec& a) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Reference product by the double loop over basis pairs.
  Vec multiply_naive(const Vec& a, const Vec& b) const;

 private:
  FiniteField field_;
  std::uint32_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> left_inverse_;  // row i: k -> j with b_i b_j = b_k
};


/// Row-echelon basis of a subspace of F_q^n, grown one vector at a time.
class EchelonBasis {
 public:
  EchelonBasis(const FiniteField& field, std::uint32_t n) : field_(&field), n_(n) {}

  /// Reduces v against the basis; adds it and returns true if it is independent.
  bool insert(std::vector<FiniteField::Elem> v);
  /// True if v lies in the span.
  bool contains(std::vector<FiniteField::Elem> v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<FiniteField::Elem>>& rows() const noexcept { return rows_; }

 private:
  void reduce(std::vector<FiniteField::Elem>& v) const;

  const FiniteField* field_;
  std::uint32_t n_;
  std::vector<std::vector<FiniteField::Elem>> rows_;  // each with leading 1 at pivots_[i]
  std::vector<std::uint32_t> pivots_;
};

}  // namespace gralg
