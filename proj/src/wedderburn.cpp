#include "gralg/wedderburn.hpp"

namespace gralg {

namespace {

DecompositionSummary summarize(const GroupSpec& spec, const FieldSpec& field, const ClassCountBreakdown& counts) {
  const AbelianType ab = abelianization(spec);
  DecompositionSummary out{spec, field};
  out.num_fields = counts.n_abelianization;
  out.num_quaternion = counts.total - counts.n_abelianization;
  if (field.is_finite()) out.field_degrees = gralg::field_degrees(ab, field.order());
  out.commutative_dim = ab.order();
  out.total_dim = Group(spec).order();
  return out;
}

}  // namespace

DecompositionSummary decompose(const GroupSpec& spec, const FieldSpec& field) {
  return summarize(spec, field, pipeline_breakdown(spec, field));
}

DecompositionSummary decompose_brute(const GroupSpec& spec, const FieldSpec& field, std::uint64_t ceiling) {
  return summarize(spec, field, brute_force_breakdown(spec, field, ceiling));
}

}  // namespace gralg
