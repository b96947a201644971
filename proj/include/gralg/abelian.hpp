#pragma once

// Finite abelian 2-groups: invariant-factor types, Smith normal form reduction of
// presentations, and Galois-orbit (K-class) counts with their field degrees.

#include "gralg/arith2.hpp"
#include "gralg/core.hpp"
#include "gralg/field.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gralg {

/// Isomorphism type of a finite abelian 2-group by its invariant factors.
class AbelianType {
 public:
  AbelianType() = default;
  explicit AbelianType(TwoAdicExponents exps) : exps_(std::move(exps)) {}
  AbelianType(std::initializer_list<int> exps) : exps_(std::vector<int>(exps)) {}

  const TwoAdicExponents& exps() const noexcept { return exps_; }
  std::size_t rank() const noexcept { return exps_.rank(); }
  Count order() const { return pow2(static_cast<unsigned>(exps_.log2_order())); }
  int log2_order() const noexcept { return exps_.log2_order(); }
  /// log2 of the group exponent.
  int exponent_log2() const noexcept { return exps_.max_exponent(); }
  /// e.g. "C_8 x C_2"; the trivial group prints as "1".
  std::string to_string() const;

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
  friend auto operator<=>(const AbelianType&, const AbelianType&) = default;

 private:
  TwoAdicExponents exps_;
};

/// Element of an AbelianType: coords[i] lies in [0, 2^{e_i}).
struct AbelianElement {
  std::vector<std::uint64_t> coords;
  friend bool operator==(const AbelianElement&, const AbelianElement&) = default;
};

/// Abelian group on `num_generators` generators; each relation row is an exponent
/// vector that equals the identity.
struct AbelianPresentation {
  std::size_t num_generators = 0;
  std::vector<std::vector<std::int64_t>> relations;
};

/// Result of reducing a presentation: the invariant-factor type plus the map sending
/// each generator to its coordinates in the invariant-factor basis.
struct SmithReduction {
  AbelianType type;
  /// projection[g][i] = coordinate i of generator g, reduced mod 2^{e_i}.
  std::vector<std::vector<std::uint64_t>> projection;

  /// Coordinates of the element g_1^{w_1} ... g_n^{w_n}.
  AbelianElement project(std::span<const std::int64_t> word) const;
};

/// Integer Smith normal form of the relation matrix. Throws DomainError if the group is
/// infinite or has elements of odd order.
SmithReduction smith_decompose(const AbelianPresentation& p);
AbelianType smith_reduce(const AbelianPresentation& p);

/// Number of Q-classes, i.e. of cyclic subgroups.
Count q_class_count(const AbelianType& a);

/// Number of orbits of a -> a^r for r in the Galois group of the field; computed from
/// the cyclic-subgroup counts by order and the order of q modulo 2^k.
Count k_class_count(const AbelianType& a, const FieldSpec& field);
Count k_class_count(const AbelianType& a, std::uint64_t q);

/// 2*alpha - beta, with alpha the number of cyclic subgroups and beta those generated by
/// elements of order at most 4. Equals the F_q count exactly when q = 3 (mod 8).
Count k_class_count_minimal_form(const AbelianType& a);

/// Degree d of a simple component F_{q^d} of F_q[A] -> number of such components.
using DegreeMultiset = std::map<std::uint64_t, Count>;

/// F_q[A] = sum of F_{q^d}; degrees are the orbit sizes of a -> a^q.
DegreeMultiset field_degrees(const AbelianType& a, std::uint64_t q);

Count degree_sum(const DegreeMultiset& m);
Count degree_count(const DegreeMultiset& m);

// Enumeration-based counterparts. These walk every element and refuse groups larger
// than `ceiling`.

std::uint64_t k_class_count_brute(const AbelianType& a, const FieldSpec& field,
                                  std::uint64_t ceiling = kDefaultCeiling);
DegreeMultiset field_degrees_brute(const AbelianType& a, std::uint64_t q, std::uint64_t ceiling = kDefaultCeiling);
Count cyclic_subgroup_count_brute(const AbelianType& a, std::uint64_t ceiling = kDefaultCeiling);
Count cyclic_subgroup_count_by_order_brute(const AbelianType& a, int k, std::uint64_t ceiling = kDefaultCeiling);

/// Orbit label of every element (index in the packed layout of a.exps()) under the
/// Galois action of `field`; labels are the smallest index in each orbit.
std::vector<std::uint32_t> galois_orbit_labels(const AbelianType& a, const FieldSpec& field,
                                               std::uint64_t ceiling = kDefaultCeiling);

/// Packed-index helpers for enumerating elements of an AbelianType.
std::uint32_t element_index(const AbelianType& a, const AbelianElement& e);
AbelianElement element_at(const AbelianType& a, std::uint32_t index);

}  // namespace gralg
