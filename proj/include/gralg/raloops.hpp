#pragma once

// RA loops L = M(G, *, g0) = G u Gu over the families D1..D5xC:
//   g(hu) = (hg)u,  (gu)h = (gh*)u,  (gu)(hu) = g0 h* g,
// where g* = g for central g and g* = sg otherwise.

#include "gralg/finite_field.hpp"
#include "gralg/groups.hpp"
#include "gralg/magma_algebra.hpp"
#include "gralg/wedderburn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gralg {

enum class LoopClass { L1, L2, L3, L4, L5, L6, L7 };

std::string_view loop_class_name(LoopClass c);
LoopClass parse_loop_class(std::string_view name);
/// Underlying group family of a class.
Family loop_family(LoopClass c);

struct LoopSpec {
  LoopClass cls;
  std::vector<int> ms;

  /// Throws DomainError on wrong arity or m_i < 1.
  static LoopSpec make(LoopClass c, std::vector<int> ms);
  GroupSpec group() const { return GroupSpec::make(loop_family(cls), ms); }
  /// u^2: 1 for L1, L3, L5; t1 for L2, L4, L6; t4 for L7.
  GroupElement g0() const;
  std::string name() const;

  friend bool operator==(const LoopSpec&, const LoopSpec&) = default;
};

struct LoopElement {
  GroupElement g;
  bool in_coset_u = false;
  friend bool operator==(const LoopElement&, const LoopElement&) = default;
};

class Loop {
 public:
  explicit Loop(LoopSpec spec);

  const LoopSpec& spec() const noexcept { return spec_; }
  const Group& group() const noexcept { return group_; }
  Count order() const { return 2 * group_.order(); }

  GroupElement star(const GroupElement& g) const;
  LoopElement star(const LoopElement& l) const;
  LoopElement multiply(const LoopElement& a, const LoopElement& b) const;
  LoopElement u() const { return {group_.identity(), true}; }
  LoopElement identity() const { return {group_.identity(), false}; }

  /// Index in [0, |L|): group index, plus |G| for the coset Gu.
  std::uint32_t index(const LoopElement& l) const;
  LoopElement element(std::uint32_t index) const;
  std::uint32_t enumerable_size(std::uint64_t ceiling) const;
  /// table[a * n + b] = index of a*b. Throws CeilingExceeded if |L| > ceiling.
  std::vector<std::uint32_t> multiplication_table(std::uint64_t ceiling = 4096) const;

 private:
  LoopSpec spec_;
  Group group_;
  GroupElement g0_;
};

LoopElement loop_multiply(const LoopSpec& spec, const LoopElement& a, const LoopElement& b);

struct MoufangReport {
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  std::uint64_t moufang_failures = 0;      // ((xy)z)y != x(y(zy))
  std::uint64_t nonassociative_triples = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t diassociativity_failures = 0;  // non-associative triple drawn from {x, y}

  /// Moufang holds, pairs are diassociative, and the loop is not a group.
  bool ok() const { return moufang_failures == 0 && diassociativity_failures == 0 && nonassociative_triples > 0; }
};

/// Every triple of the multiplication table. Throws CeilingExceeded if |L| > ceiling.
MoufangReport check_moufang_exhaustive(const LoopSpec& spec, std::uint64_t ceiling = 1024);
/// `trials` random triples and pairs drawn with a seeded generator; works for any size.
MoufangReport check_moufang_random(const LoopSpec& spec, std::uint64_t trials, std::uint64_t seed);

enum class CayleySplit { Split, Division, Unknown };
std::string_view cayley_split_name(CayleySplit s);

struct LoopAlgebraSummary {
  LoopSpec spec;
  FieldSpec field;
  Count num_fields = 0;
  Count num_cayley = 0;
  /// Finite fields only: degrees of the field components over F_q.
  std::optional<DegreeMultiset> field_degrees;
  /// One entry per Cayley component; empty when the count is too large to list.
  std::vector<CayleySplit> cayley_splits;
  /// Field components of KG whose A_i + A_i u stays a single (quadratic) field.
  Count nonsplit_field_components = 0;

  Count num_components() const { return num_fields + num_cayley; }
};

/// Field component of K[G/G'] attached to one Galois orbit of characters.
struct CharacterOrbit {
  std::uint64_t character_order;  // n: the component is K(zeta_n)
  std::uint64_t g0_value_order;   // order of chi(g0) in mu_n
  std::uint64_t orbit_size;       // degree of the component over K
  bool g0_is_square;              // A_i + A_i u = A_i (+) A_i
  Count multiplicity;             // number of orbits with these data
};

/// Orbits of characters of G/G' under the Galois group of K, grouped by their data.
std::vector<CharacterOrbit> character_orbits(const LoopSpec& spec, const FieldSpec& field);

/// Each quaternion component of KG becomes one Cayley component; each field component
/// becomes two fields when the image of g0 is a square in it, and one field otherwise.
LoopAlgebraSummary loop_decompose(const LoopSpec& spec, const FieldSpec& field);

struct LoopComparison {
  LoopAlgebraSummary a, b;
  bool counts_equal = false;
  /// Finite fields: the field-degree multisets coincide as well.
  bool degrees_equal = false;
  /// Counts agree for different loops over Q while the Cayley parts may still differ
  /// in being split or division algebras.
  bool split_caveat = false;
  /// Known split flags differ, so the algebras are not isomorphic.
  bool distinguished_by_splitting = false;
};

LoopComparison compare_loops(const LoopSpec& a, const LoopSpec& b, const FieldSpec& field);

/// The loop algebra F_q L.
MagmaAlgebra loop_algebra(const LoopSpec& spec, const FiniteField& f, std::uint64_t ceiling = 4096);
/// x* for x in F_q L (linear extension of the involution).
MagmaAlgebra::Vec loop_algebra_star(const Loop& loop, const MagmaAlgebra& alg, const MagmaAlgebra::Vec& x);

struct NormReport {
  std::uint64_t samples = 0;
  std::uint64_t noncentral = 0;         // n(x) failing to commute with some loop element
  std::uint64_t nonmultiplicative = 0;  // n(xy) != n(x) n(y)
  bool ok() const { return noncentral == 0 && nonmultiplicative == 0; }
};

/// Samples random x, y in F_q L with `support` nonzero coefficients (0 = dense) and checks
/// that n(x) = x x* is central and n(xy) = n(x) n(y).
NormReport norm_check(const LoopSpec& spec, std::uint64_t q, std::uint64_t samples, std::uint64_t seed,
                      std::uint32_t support = 0);

struct ProjectionReport {
  std::uint64_t ideals_checked = 0;
  std::uint64_t mismatches = 0;  // pi_G(I) != pi_u(I)
  bool ok() const { return mismatches == 0 && ideals_checked > 0; }
};

/// For the central idempotents (1 +- s)/2 times primitive idempotents of F_q Z(G), builds
/// the two-sided ideal I of F_q L they generate and compares its G- and u-projections.
ProjectionReport projection_check(const LoopSpec& spec, std::uint64_t q);

}  // namespace gralg
