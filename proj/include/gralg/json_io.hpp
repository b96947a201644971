#pragma once

// JSON records for the summaries. Keys are emitted in a fixed order. Counts are JSON
// integers when they fit in 64 bits and decimal strings otherwise.

#include "gralg/classify.hpp"
#include "gralg/codes.hpp"
#include "gralg/raloops.hpp"
#include "gralg/tables.hpp"
#include "gralg/wedderburn.hpp"

#include <json.hpp>

namespace gralg {

using Json = nlohmann::ordered_json;

Json count_json(const Count& c);

/// [{"degree": d, "count": n}, ...] by increasing degree.
Json degrees_json(const DegreeMultiset& m);

/// {family, ms, field, num_fields, field_degrees?, num_quaternion, commutative_dim, total_dim}
Json to_json(const DecompositionSummary& s);

/// {family, ms, field, N1, N2, N3, N4, N0, N}; the keys read M1.. over a finite field.
Json to_json(const GroupSpec& spec, const ClassCountBreakdown& b);

/// {class, ms, field, num_fields, field_degrees?, num_cayley, nonsplit_field_components,
///  cayley_splits?}
Json to_json(const LoopAlgebraSummary& s);

/// {family, ms, field, oracle_ran, theorem_applies, oracle_pipeline_agree, theorem_agrees,
///  quantities: [{name, oracle, pipeline, theorem, agree}], notes}
Json to_json(const DiscrepancyReport& r);

/// {table, cells, stated_mismatches, unexplained_mismatches, oracle_failures,
///  brute_checked, mismatches: [{row, params, column, stated, derived, brute?, note}]}
Json to_json(const TableReport& r);

/// [{code, dimension, coset, idempotent}]; idempotent lists every coefficient in
/// element-index order.
Json codes_json(const std::vector<GroupCode>& codes);

}  // namespace gralg
