#include "gralg/json_io.hpp"

namespace gralg {

namespace {

Json ms_json(const std::vector<int>& ms) {
  Json a = Json::array();
  for (int m : ms) a.push_back(m);
  return a;
}

Json opt_count(const std::optional<Count>& c) { return c ? count_json(*c) : Json(nullptr); }

}  // namespace

Json count_json(const Count& c) {
  if (c >= 0 && c <= Count{UINT64_MAX}) return c.convert_to<std::uint64_t>();
  if (c < 0 && c >= Count{INT64_MIN}) return c.convert_to<std::int64_t>();
  return c.str();
}

Json degrees_json(const DegreeMultiset& m) {
  Json a = Json::array();
  for (const auto& [d, n] : m) a.push_back(Json{{"degree", d}, {"count", count_json(n)}});
  return a;
}

Json to_json(const DecompositionSummary& s) {
  Json j;
  j["family"] = family_name(s.spec.family);
  j["ms"] = ms_json(s.spec.ms);
  j["field"] = s.field.tag();
  j["num_fields"] = count_json(s.num_fields);
  if (s.field_degrees) j["field_degrees"] = degrees_json(*s.field_degrees);
  j["num_quaternion"] = count_json(s.num_quaternion);
  j["commutative_dim"] = count_json(s.commutative_dim);
  j["total_dim"] = count_json(s.total_dim);
  return j;
}

Json to_json(const GroupSpec& spec, const ClassCountBreakdown& b) {
  const std::string p = b.field.is_rational() ? "N" : "M";
  Json j;
  j["family"] = family_name(spec.family);
  j["ms"] = ms_json(spec.ms);
  j["field"] = b.field.tag();
  j[p + "1"] = opt_count(b.n_center);
  j[p + "2"] = opt_count(b.n_x);
  j[p + "3"] = opt_count(b.n_y);
  j[p + "4"] = opt_count(b.n_xy);
  j[p + "0"] = count_json(b.n_abelianization);
  j[p] = count_json(b.total);
  return j;
}

Json to_json(const LoopAlgebraSummary& s) {
  Json j;
  j["class"] = loop_class_name(s.spec.cls);
  j["ms"] = ms_json(s.spec.ms);
  j["field"] = s.field.tag();
  j["num_fields"] = count_json(s.num_fields);
  if (s.field_degrees) j["field_degrees"] = degrees_json(*s.field_degrees);
  j["num_cayley"] = count_json(s.num_cayley);
  j["nonsplit_field_components"] = count_json(s.nonsplit_field_components);
  if (!s.cayley_splits.empty()) {
    // Run-length encoded: the lists run to thousands of identical entries.
    Json runs = Json::array();
    for (CayleySplit c : s.cayley_splits) {
      const std::string name(cayley_split_name(c));
      if (!runs.empty() && runs.back()["split"] == name)
        runs.back()["count"] = runs.back()["count"].get<std::uint64_t>() + 1;
      else
        runs.push_back(Json{{"split", name}, {"count", 1}});
    }
    j["cayley_splits"] = std::move(runs);
  }
  return j;
}

Json to_json(const DiscrepancyReport& r) {
  Json j;
  j["family"] = family_name(r.spec.family);
  j["ms"] = ms_json(r.spec.ms);
  j["field"] = r.field.tag();
  j["oracle_ran"] = r.oracle_ran;
  j["theorem_applies"] = r.theorem_applies;
  j["oracle_pipeline_agree"] = r.oracle_pipeline_agree();
  j["theorem_agrees"] = r.theorem_agrees();
  Json qs = Json::array();
  for (const auto& q : r.quantities) {
    Json e;
    e["name"] = q.name;
    e["oracle"] = opt_count(q.oracle);
    e["pipeline"] = opt_count(q.pipeline);
    e["theorem"] = opt_count(q.theorem);
    e["agree"] = q.agree;
    qs.push_back(std::move(e));
  }
  j["quantities"] = std::move(qs);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const TableReport& r) {
  Json j;
  j["table"] = r.table;
  j["cells"] = r.cells.size();
  j["stated_mismatches"] = r.stated_mismatches();
  j["unexplained_mismatches"] = r.unexplained_mismatches();
  j["oracle_failures"] = r.oracle_failures();
  j["brute_checked"] = r.brute_checked();
  Json mm = Json::array();
  for (const auto& c : r.cells) {
    if (c.matches_stated() && c.oracle_agrees()) continue;
    Json e;
    e["row"] = c.row;
    e["params"] = c.params;
    e["column"] = c.column;
    e["stated"] = count_json(c.stated);
    e["derived"] = count_json(c.derived);
    if (c.brute) e["brute"] = count_json(*c.brute);
    e["note"] = c.note;
    mm.push_back(std::move(e));
  }
  j["mismatches"] = std::move(mm);
  return j;
}

Json codes_json(const std::vector<GroupCode>& codes) {
  Json a = Json::array();
  for (std::size_t i = 0; i < codes.size(); ++i) {
    Json e;
    e["code"] = i;
    e["dimension"] = codes[i].dimension;
    e["coset"] = codes[i].coset;
    e["idempotent"] = codes[i].idempotent;
    a.push_back(std::move(e));
  }
  return a;
}

}  // namespace gralg
