#pragma once

// Regression fixtures transcribed from the published tables and case statements, and
// the checks that re-derive them.

#include "gralg/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gralg {

/// Raw fixture text (TSV with a header row). Names: "tab1", "tab2", "cases".
std::string_view fixture_text(std::string_view name);

using TsvRow = std::map<std::string, std::string, std::less<>>;
/// Parses tab-separated text with a header row; blank lines are skipped. Missing
/// trailing fields read as empty.
std::vector<TsvRow> parse_tsv(std::string_view text);

/// One published figure against the library's derivation.
struct TableCell {
  std::string row;
  std::string params;  // e.g. "a=4,b=3"; empty for rows without parameters
  std::string column;
  Count stated = 0;
  Count derived = 0;
  std::optional<Count> brute;  // enumeration, where the object is small enough
  std::string note;            // fixture annotation

  bool matches_stated() const { return stated == derived; }
  bool oracle_agrees() const { return !brute || *brute == derived; }
};

struct TableReport {
  std::string table;
  std::vector<TableCell> cells;

  std::size_t stated_mismatches() const;
  /// Mismatches in rows that carry no note.
  std::size_t unexplained_mismatches() const;
  std::size_t oracle_failures() const;
  std::size_t brute_checked() const;
  bool ok() const { return unexplained_mismatches() == 0 && oracle_failures() == 0; }
};

/// Abelian table: Q-classes (cyclic subgroups) and F-classes at q = 3. Parameters run
/// over 3 <= b <= a <= max_param; brute force where |A| <= brute_ceiling.
TableReport check_tab1(int max_param = 8, std::uint64_t brute_ceiling = 4096);

/// Order-64 loop table over Q: fields and Cayley algebras. The brute column holds the
/// doubled field count and quaternion count of QG by class enumeration.
TableReport check_tab2();

/// Per-case statements for D1..D5xC. "F" rows are evaluated at q = 3 and q = 11.
TableReport check_cases(std::uint64_t brute_ceiling = 1024);

/// Derived rows of the abelian table as "Group / Q-classes / F-classes" TSV.
std::string tab1_tsv(const TableReport& r);
/// Every cell with its comparison status.
std::string report_tsv(const TableReport& r);

}  // namespace gralg
