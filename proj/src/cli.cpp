#include "gralg/cli.hpp"

#include "gralg/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace gralg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string resolve_format(const Request& req, const char* fallback) {
  const std::string f = req.format.empty() ? fallback : req.format;
  if (f != "json" && f != "tsv") throw UsageError("unknown format '" + f + "' (expected json or tsv)");
  return f;
}

FieldSpec single_field(const Request& req) {
  if (req.fields.empty()) return FieldSpec::rationals();
  if (req.fields.size() != 1) throw UsageError("exactly one --field is expected for " + req.command);
  return FieldSpec::parse(req.fields.front());
}

GroupSpec group_of(const Request& req) {
  if (req.family.empty()) throw UsageError("--family is required");
  return GroupSpec::make(parse_family(req.family), req.ms);
}

// Scalar rendering of a JSON value inside a TSV cell.
std::string cell(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ',';
      s += cell(e);
    }
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, e] : v.items()) {
      if (!s.empty()) s += ':';
      s += cell(e);
    }
    return s;
  }
  return v.dump();
}

// Flat records: one header row of keys, then one row per record.
void write_tsv(std::ostream& out, const std::vector<Json>& records) {
  if (records.empty()) return;
  bool first = true;
  for (const auto& [k, v] : records.front().items()) {
    out << (first ? "" : "\t") << k;
    first = false;
  }
  out << '\n';
  for (const auto& r : records) {
    first = true;
    for (const auto& [k, v] : r.items()) {
      out << (first ? "" : "\t") << cell(v);
      first = false;
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_classify(const Request& req, std::ostream& out) {
  const GroupSpec spec = group_of(req);
  const FieldSpec field = single_field(req);
  const ClassCountBreakdown b = req.brute ? brute_force_breakdown(spec, field, req.ceiling.value_or(kDefaultCeiling))
                                          : pipeline_breakdown(spec, field);
  const Json j = to_json(spec, b);
  if (resolve_format(req, "json") == "json") write_json(out, j);
  else write_tsv(out, {j});
  return 0;
}

int cmd_decompose(const Request& req, std::ostream& out) {
  const GroupSpec spec = group_of(req);
  const FieldSpec field = single_field(req);
  const DecompositionSummary s =
      req.brute ? decompose_brute(spec, field, req.ceiling.value_or(kDefaultCeiling)) : decompose(spec, field);
  const Json j = to_json(s);
  if (resolve_format(req, "json") == "json") write_json(out, j);
  else write_tsv(out, {j});
  return 0;
}

int cmd_loop(const Request& req, std::ostream& out) {
  if (req.family.empty()) throw UsageError("--class is required");
  const LoopSpec spec = LoopSpec::make(parse_loop_class(req.family), req.ms);
  const FieldSpec field = single_field(req);
  Json j = to_json(loop_decompose(spec, field));
  int status = 0;
  if (req.check) {
    const std::uint64_t ceiling = req.ceiling.value_or(1024);
    const Count order = Loop(spec).order();
    const MoufangReport m = order <= ceiling ? check_moufang_exhaustive(spec, ceiling)
                                             : check_moufang_random(spec, 4096, req.seed);
    Json c;
    c["mode"] = m.exhaustive ? "exhaustive" : "random";
    c["triples_checked"] = m.triples_checked;
    c["moufang_failures"] = m.moufang_failures;
    c["nonassociative_triples"] = m.nonassociative_triples;
    c["pairs_checked"] = m.pairs_checked;
    c["diassociativity_failures"] = m.diassociativity_failures;
    c["ok"] = m.ok();
    j["moufang"] = std::move(c);
    if (!m.ok()) status = 1;
  }
  if (resolve_format(req, "json") == "json") write_json(out, j);
  else write_tsv(out, {j});
  return status;
}

AbelianType ambient_of(const Request& req) {
  for (int e : req.exps)
    if (e < 0) throw UsageError("--exps entries must be nonnegative");
  std::vector<int> exps = req.exps;
  exps.erase(std::remove(exps.begin(), exps.end(), 0), exps.end());
  std::sort(exps.rbegin(), exps.rend());
  return AbelianType(TwoAdicExponents(std::move(exps)));
}

int cmd_codes(const Request& req, std::ostream& out) {
  const FieldSpec field = single_field(req);
  if (!field.is_finite()) throw UsageError("codes needs a finite field, e.g. --field Fq:3");
  const AbelianType a = ambient_of(req);
  const auto codes = primitive_idempotents(a, field.order(), req.ceiling.value_or(4096));
  const IdempotentReport rep = verify_idempotents(a, field.order(), codes);
  if (resolve_format(req, "tsv") == "tsv") {
    out << idempotent_table_tsv(codes);
  } else {
    Json j;
    j["ambient"] = a.to_string();
    j["field"] = field.tag();
    j["codes"] = codes_json(codes);
    j["verified"] = rep.ok();
    write_json(out, j);
  }
  return rep.ok() ? 0 : 1;
}

// Every parameter tuple with m_i >= 1 and |G| <= 2^max_log2.
std::vector<GroupSpec> grid(Family f, int max_log2) {
  std::vector<GroupSpec> specs;
  const std::size_t k = family_arity(f);
  const int budget = max_log2 - 2;
  if (budget < static_cast<int>(k)) return specs;
  std::vector<int> ms(k, 1);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == k) {
      specs.push_back(GroupSpec::make(f, ms));
      return;
    }
    const int reserve = static_cast<int>(k - i - 1);
    for (int m = 1; m <= left - reserve; ++m) {
      ms[i] = m;
      rec(i + 1, left - m);
    }
  };
  rec(0, budget);
  return specs;
}

int cmd_verify(const Request& req, std::ostream& out, std::ostream& err) {
  const std::uint64_t ceiling = req.ceiling.value_or(1024);
  int max_log2 = 0;
  while ((std::uint64_t{2} << max_log2) <= ceiling && max_log2 < 40) ++max_log2;

  std::vector<Family> families;
  if (req.family.empty()) families = {Family::D1, Family::D2, Family::D3, Family::D4, Family::D5, Family::D5xC};
  else families = {parse_family(req.family)};
  std::vector<FieldSpec> fields;
  if (req.fields.empty())
    for (const char* tag : {"Q", "Fq:3", "Fq:5", "Fq:7", "Fq:9", "Fq:11", "Fq:13", "Fq:19"})
      fields.push_back(FieldSpec::parse(tag));
  for (const auto& t : req.fields) fields.push_back(FieldSpec::parse(t));
  const std::string format = resolve_format(req, "tsv");

  std::size_t checked = 0, disagreements = 0, theorem_disagreements = 0;
  Json grid_json = Json::array();
  if (format == "tsv") out << "group\tfield\tquantity\toracle\tpipeline\ttheorem\tstatus\n";
  for (Family f : families) {
    for (const GroupSpec& spec : grid(f, max_log2)) {
      for (const FieldSpec& field : fields) {
        const DiscrepancyReport r = discrepancy_report(spec, field, ceiling);
        ++checked;
        if (!r.oracle_pipeline_agree()) ++disagreements;
        if (!r.theorem_agrees()) ++theorem_disagreements;
        if (format == "json") {
          grid_json.push_back(to_json(r));
          continue;
        }
        for (const auto& q : r.quantities) {
          auto v = [](const std::optional<Count>& c) { return c ? c->str() : std::string("-"); };
          const bool op = !q.oracle || !q.pipeline || *q.oracle == *q.pipeline;
          const char* status = !op ? "oracle-mismatch" : q.agree ? "ok" : "theorem-mismatch";
          out << spec.name() << '\t' << field.tag() << '\t' << q.name << '\t' << v(q.oracle) << '\t'
              << v(q.pipeline) << '\t' << v(q.theorem) << '\t' << status << '\n';
        }
      }
    }
  }

  std::size_t fixture_oracle_failures = 0;
  Json fixtures = Json::array();
  for (const TableReport& t : {check_tab1(), check_tab2(), check_cases()}) {
    fixture_oracle_failures += t.oracle_failures();
    fixtures.push_back(to_json(t));
    err << t.table << ": " << t.cells.size() << " cells, " << t.stated_mismatches() << " stated mismatches ("
        << t.unexplained_mismatches() << " unexplained), " << t.oracle_failures() << " oracle failures\n";
  }
  err << "grid: " << checked << " reports, " << disagreements << " oracle/pipeline disagreements, "
      << theorem_disagreements << " theorem disagreements\n";

  if (format == "json") {
    Json j;
    j["ceiling"] = ceiling;
    j["grid"] = std::move(grid_json);
    j["fixtures"] = std::move(fixtures);
    Json s;
    s["reports"] = checked;
    s["oracle_pipeline_disagreements"] = disagreements;
    s["theorem_disagreements"] = theorem_disagreements;
    s["fixture_oracle_failures"] = fixture_oracle_failures;
    j["summary"] = std::move(s);
    write_json(out, j);
  }
  return disagreements == 0 && fixture_oracle_failures == 0 ? 0 : 1;
}

int cmd_table(const Request& req, std::ostream& out, std::ostream& err) {
  TableReport r;
  if (req.table == "tab1") r = check_tab1();
  else if (req.table == "tab2") r = check_tab2();
  else if (req.table == "cases") r = check_cases();
  else throw UsageError("unknown table '" + req.table + "' (expected tab1, tab2 or cases)");

  if (resolve_format(req, "tsv") == "json") write_json(out, to_json(r));
  else if (req.table == "tab1" && !req.report) out << tab1_tsv(r);
  else out << report_tsv(r);

  for (const auto& c : r.cells)
    if (!c.matches_stated())
      err << (c.note.empty() ? "diff" : "annotated") << ": " << c.row << ' ' << c.params << ' ' << c.column
          << " stated=" << c.stated << " derived=" << c.derived << '\n';
  err << r.table << ": " << r.cells.size() << " cells, " << r.stated_mismatches() << " stated mismatches ("
      << r.unexplained_mismatches() << " unexplained), " << r.oracle_failures() << " oracle failures\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int run(const Request& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.command == "classify") return cmd_classify(req, out);
    if (req.command == "decompose") return cmd_decompose(req, out);
    if (req.command == "loop") return cmd_loop(req, out);
    if (req.command == "codes") return cmd_codes(req, out);
    if (req.command == "verify") return cmd_verify(req, out, err);
    if (req.command == "table") return cmd_table(req, out, err);
    throw UsageError("unknown command '" + req.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << " (raise --ceiling)\n";
    return 2;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wedderburn decompositions of 2-group and RA-loop algebras", "gralg"};
  app.require_subcommand(1);
  Request req;
  std::string field_tag = "Q";

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--family", req.family, "D1, D2, D3, D4, D5 or D5xC")->required();
    sub->add_option("--m", req.ms, "parameters m_1 ... m_k")->required();
    sub->add_option("--field", field_tag, "Q or Fq:<q> with q an odd prime power");
    sub->add_option("--format", req.format, "json (default) or tsv");
    sub->add_option("--ceiling", req.ceiling, "element limit for enumeration");
  };

  auto* classify = app.add_subcommand("classify", "K-class counts N1..N4, N0, N");
  add_group(classify);
  classify->add_flag("--brute", req.brute, "count by enumerating G");

  auto* decompose = app.add_subcommand("decompose", "fields and quaternion algebras of KG");
  add_group(decompose);
  decompose->add_flag("--brute", req.brute, "count by enumerating G");

  auto* loop = app.add_subcommand("loop", "fields and Cayley algebras of KL for an RA loop");
  loop->add_option("--class,--family", req.family, "L1 ... L7")->required();
  loop->add_option("--m", req.ms, "parameters of the underlying group")->required();
  loop->add_option("--field", field_tag, "Q or Fq:<q>");
  loop->add_option("--format", req.format, "json (default) or tsv");
  loop->add_option("--seed", req.seed, "seed for the randomized identity check");
  loop->add_option("--ceiling", req.ceiling, "largest loop checked exhaustively (default 1024)");
  loop->add_flag("--check", req.check, "also check the Moufang identities");

  auto* codes = app.add_subcommand("codes", "primitive idempotents of F_q[A]");
  codes->add_option("--exps", req.exps, "log2 orders of the cyclic factors of A")->required();
  codes->add_option("--field", field_tag, "Fq:<q>")->required();
  codes->add_option("--format", req.format, "tsv (default) or json");
  codes->add_option("--ceiling", req.ceiling, "largest |A| (default 4096)");

  std::vector<std::string> verify_fields;
  auto* verify = app.add_subcommand("verify", "brute force vs pipeline vs theorems over a grid");
  verify->add_option("--family", req.family, "restrict the grid to one family");
  verify->add_option("--field", verify_fields, "fields to check (default Q and F_q for q in 3..19)");
  verify->add_option("--format", req.format, "tsv (default) or json");
  verify->add_option("--ceiling", req.ceiling, "largest |G| in the grid (default 1024)");

  auto* table = app.add_subcommand("table", "re-derive a fixture table and diff it");
  table->add_option("name", req.table, "tab1, tab2 or cases")->required();
  table->add_option("--format", req.format, "tsv (default) or json");
  table->add_flag("--report", req.report, "per-cell comparison for tab1 as well");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  req.command = app.get_subcommands().front()->get_name();
  req.fields = req.command == "verify" ? verify_fields : std::vector<std::string>{field_tag};
  return run(req, out, err);
}

}  // namespace gralg::cli
