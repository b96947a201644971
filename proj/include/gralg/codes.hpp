#pragma once

// Minimal abelian group codes: the minimal ideals of F_q[A], one per cyclotomic coset of
// characters, each generated by a primitive idempotent.

#include "gralg/abelian.hpp"
#include "gralg/finite_field.hpp"
#include "gralg/magma_algebra.hpp"

#include <string>
#include <vector>

namespace gralg {

/// A minimal ideal of F_q[A]. Coefficients are indexed by element_index(ambient, .).
struct GroupCode {
  AbelianType ambient;
  std::uint64_t q = 0;
  /// Character indices (in the packed layout of `ambient`) of the coset.
  std::vector<std::uint32_t> coset;
  MagmaAlgebra::Vec idempotent;
  std::uint64_t dimension = 0;
};

/// Orbits of the character index set under c -> q c, ordered by smallest member; each
/// orbit is listed from its smallest member onwards along c, qc, q^2 c, ...
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(const AbelianType& a, std::uint64_t q,
                                                          std::uint64_t ceiling = kDefaultCeiling);

/// F_q[A] as a magma algebra on the packed element indices.
MagmaAlgebra abelian_group_algebra(const AbelianType& a, const FiniteField& f);

/// e_C = |A|^{-1} sum_a (sum_{c in C} chi_c(a^{-1})) a, evaluated in F_{q^D} with D the
/// order of q modulo exp(A); the dimension of each ideal is the rank of the translates
/// of e_C. Throws DomainError if the characteristic divides |A| (never, for odd q) and
/// CeilingExceeded above `ceiling` elements.
std::vector<GroupCode> primitive_idempotents(const AbelianType& a, std::uint64_t q, std::uint64_t ceiling = 4096);

/// dim_F (F_q[A] e): rank of the translates of e.
std::uint64_t ideal_dimension(const MagmaAlgebra& alg, const MagmaAlgebra::Vec& e);

struct IdempotentReport {
  bool idempotent = true;  // e^2 = e for every code
  bool orthogonal = true;  // e_i e_j = 0 for i != j
  bool complete = true;    // sum e_i = 1
  bool dimensions_match_cosets = true;
  bool ok() const { return idempotent && orthogonal && complete && dimensions_match_cosets; }
};

/// Pairwise orthogonality is checked through prefix sums: with every e_k idempotent and
/// (e_1 + ... + e_{k-1}) e_k = 0 for all k, the e_k are pairwise orthogonal.
IdempotentReport verify_idempotents(const AbelianType& a, std::uint64_t q, const std::vector<GroupCode>& codes);

/// TSV: header "code\tdimension\telement\tcoefficient", one row per nonzero coefficient;
/// elements are written as exponent tuples like (3,0,1).
std::string idempotent_table_tsv(const std::vector<GroupCode>& codes);

}  // namespace gralg
