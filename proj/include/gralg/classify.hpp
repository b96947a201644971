#pragma once

// K-class counts of the nonabelian families. Three independent routes:
//   brute force   - orbit enumeration over every element of G;
//   pipeline      - abelian counts of the centre, the three coset subquotients and G/G';
//   theorem       - the closed forms stated for each family in its general range.

#include "gralg/core.hpp"
#include "gralg/field.hpp"
#include "gralg/groups.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gralg {

/// Over Q these are N_1..N_4, N_0, N; over F_q the same slots hold M_1..M_4, M_0, M.
struct ClassCountBreakdown {
  FieldSpec field;
  std::optional<Count> n_center;  // classes inside Z(G)
  std::optional<Count> n_x;       // classes inside the coset xZ(G)
  std::optional<Count> n_y;
  std::optional<Count> n_xy;
  Count n_abelianization = 0;     // classes of G/G' = number of field components
  Count total = 0;                // classes of G = number of simple components

  bool has_parts() const { return n_center && n_x && n_y && n_xy; }
  friend bool operator==(const ClassCountBreakdown&, const ClassCountBreakdown&) = default;
};

/// Witt-Berman count by enumeration: conjugacy classes merged under g -> g^r for r in
/// the Galois group. Throws CeilingExceeded if |G| > ceiling.
Count k_class_count_group(const GroupSpec& spec, const FieldSpec& field, std::uint64_t ceiling = kDefaultCeiling);

/// Enumeration-based breakdown; each K-class lies in one coset of Z(G), and G/G' is
/// handled by additionally identifying g with sg.
ClassCountBreakdown brute_force_breakdown(const GroupSpec& spec, const FieldSpec& field,
                                          std::uint64_t ceiling = kDefaultCeiling);

/// Breakdown from abelian subquotients only; no enumeration of G, any parameters.
ClassCountBreakdown pipeline_breakdown(const GroupSpec& spec, const FieldSpec& field);

/// Closed forms of the family theorems. Over a finite field they describe only
/// q = 3 (mod 8). Throws OutOfRange outside a theorem's stated parameter range or for
/// any other q. Per-coset parts are filled where the theorem defines N through them.
ClassCountBreakdown theorem_predict(const GroupSpec& spec, const FieldSpec& field);

/// Constant c in M = 2N - c, M_0 = 2N_0 - c (D3..D5xC); nullopt for D1, D2.
std::optional<int> theorem_offset(Family f);

struct QuantityComparison {
  std::string name;  // "N1".."N4", "N0", "N" (or M..)
  std::optional<Count> oracle;
  std::optional<Count> pipeline;
  std::optional<Count> theorem;
  /// All present values coincide.
  bool agree = true;
};

struct DiscrepancyReport {
  GroupSpec spec;
  FieldSpec field;
  std::vector<QuantityComparison> quantities;
  bool oracle_ran = false;
  bool theorem_applies = false;
  /// Why the theorem leg is absent, or why the oracle was skipped.
  std::vector<std::string> notes;

  /// Oracle vs pipeline; the hard correctness condition.
  bool oracle_pipeline_agree() const;
  /// Theorem vs whichever of oracle/pipeline is present.
  bool theorem_agrees() const;
};

/// Compares brute force (when |G| <= ceiling), pipeline and theorem_predict.
DiscrepancyReport discrepancy_report(const GroupSpec& spec, const FieldSpec& field,
                                     std::uint64_t ceiling = kDefaultCeiling);

}  // namespace gralg
