#pragma once

// KG = K[G/G'] (+) Delta(G, G'): the first summand is a sum of fields, the second a
// sum of quaternion algebras (split 2x2 matrix rings over finite fields).

#include "gralg/abelian.hpp"
#include "gralg/classify.hpp"
#include "gralg/groups.hpp"

#include <optional>

namespace gralg {

struct DecompositionSummary {
  GroupSpec spec;
  FieldSpec field;
  Count num_fields = 0;
  /// Finite fields only: F_q[G/G'] = sum of F_{q^d}.
  std::optional<DegreeMultiset> field_degrees;
  Count num_quaternion = 0;
  /// dim K[G/G'] = |G/G'|.
  Count commutative_dim = 0;
  /// dim KG = |G|.
  Count total_dim = 0;

  Count num_components() const { return num_fields + num_quaternion; }
};

/// Uses the pipeline counts, so it scales to any parameters.
DecompositionSummary decompose(const GroupSpec& spec, const FieldSpec& field);

/// Same summary with the class counts taken from enumeration (|G| <= ceiling).
DecompositionSummary decompose_brute(const GroupSpec& spec, const FieldSpec& field,
                                     std::uint64_t ceiling = kDefaultCeiling);

}  // namespace gralg
