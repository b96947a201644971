#include "gralg/tables.hpp"

#include "gralg/abelian.hpp"
#include "gralg/expr.hpp"
#include "gralg/raloops.hpp"
#include "gralg/wedderburn.hpp"

#include <algorithm>
#include <sstream>

namespace gralg {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string str(const Count& c) { return c.str(); }

const std::string& field(const TsvRow& r, std::string_view key) {
  static const std::string empty;
  const auto it = r.find(key);
  return it == r.end() ? empty : it->second;
}

std::string params_string(const Bindings& b) {
  std::string out;
  for (const auto& [k, v] : b) out += (out.empty() ? "" : ",") + k + "=" + str(v);
  return out;
}

bool mentions(std::string_view text, std::string_view var) {
  for (std::size_t p = text.find(var); p != std::string_view::npos; p = text.find(var, p + 1)) {
    const bool left = p == 0 || !std::isalnum(static_cast<unsigned char>(text[p - 1]));
    const bool right = p + var.size() == text.size() || !std::isalnum(static_cast<unsigned char>(text[p + var.size()]));
    if (left && right) return true;
  }
  return false;
}

// All bindings of "v=lo..hi;w=lo..hi" satisfying every comma-separated condition.
std::vector<Bindings> expand_ranges(std::string_view ranges, std::string_view require) {
  std::vector<Bindings> out{{}};
  if (!ranges.empty()) {
    for (const auto& r : split(ranges, ';')) {
      const auto eq = r.find('='), dots = r.find("..");
      if (eq == std::string::npos || dots == std::string::npos) throw DomainError("bad range '" + r + "'");
      const std::string var = r.substr(0, eq);
      const int lo = std::stoi(r.substr(eq + 1, dots - eq - 1)), hi = std::stoi(r.substr(dots + 2));
      std::vector<Bindings> next;
      for (const auto& b : out)
        for (int v = lo; v <= hi; ++v) {
          auto c = b;
          c[var] = v;
          next.push_back(std::move(c));
        }
      out = std::move(next);
    }
  }
  if (require.empty()) return out;
  std::vector<Bindings> kept;
  for (auto& b : out) {
    bool ok = true;
    for (const auto& cond : split(require, ','))
      if (eval_expr(cond, b) == 0) ok = false;
    if (ok) kept.push_back(std::move(b));
  }
  return kept;
}

}  // namespace

std::vector<TsvRow> parse_tsv(std::string_view text) {
  std::vector<TsvRow> rows;
  std::vector<std::string> header;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, '\t');
    if (header.empty()) {
      header = std::move(cells);
      continue;
    }
    TsvRow row;
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = i < cells.size() ? cells[i] : "";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t TableReport::stated_mismatches() const {
  return std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return !c.matches_stated(); });
}
std::size_t TableReport::unexplained_mismatches() const {
  return std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return !c.matches_stated() && c.note.empty(); });
}
std::size_t TableReport::oracle_failures() const {
  return std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return !c.oracle_agrees(); });
}
std::size_t TableReport::brute_checked() const {
  return std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return c.brute.has_value(); });
}

TableReport check_tab1(int max_param, std::uint64_t brute_ceiling) {
  TableReport rep{"tab1", {}};
  const auto f3 = FieldSpec::finite(3);
  for (const auto& row : parse_tsv(fixture_text("tab1"))) {
    const auto& exps_text = field(row, "exps");
    std::string ranges;
    if (mentions(exps_text, "a")) ranges = "a=3.." + std::to_string(max_param);
    if (mentions(exps_text, "b")) ranges += ";b=3.." + std::to_string(max_param);
    for (const auto& b : expand_ranges(ranges, mentions(exps_text, "b") ? "a>=b" : "")) {
      std::vector<int> exps;
      for (const auto& e : split(exps_text, ',')) exps.push_back(static_cast<int>(eval_expr(e, b)));
      const AbelianType a{TwoAdicExponents(exps)};
      const bool small = a.log2_order() <= 62 && (std::uint64_t{1} << a.log2_order()) <= brute_ceiling;
      TableCell q{field(row, "group"), params_string(b), "Q-classes", eval_expr(field(row, "q_classes"), b),
                  q_class_count(a), std::nullopt, field(row, "note")};
      TableCell f{q.row, q.params, "F-classes", eval_expr(field(row, "f_classes"), b), k_class_count(a, 3),
                  std::nullopt, q.note};
      if (small) {
        q.brute = cyclic_subgroup_count_brute(a, brute_ceiling);
        f.brute = Count(k_class_count_brute(a, f3, brute_ceiling));
      }
      rep.cells.push_back(std::move(q));
      rep.cells.push_back(std::move(f));
    }
  }
  return rep;
}

TableReport check_tab2() {
  TableReport rep{"tab2", {}};
  const auto Q = FieldSpec::rationals();
  for (const auto& row : parse_tsv(fixture_text("tab2"))) {
    std::vector<int> ms;
    for (const auto& m : split(field(row, "ms"), ',')) ms.push_back(std::stoi(m));
    const auto spec = LoopSpec::make(parse_loop_class(field(row, "class")), ms);
    const auto s = loop_decompose(spec, Q);
    const auto g = decompose_brute(spec.group(), Q);
    const std::string label = field(row, "loop") + " " + spec.name();
    rep.cells.push_back({label, "", "fields", std::stoll(field(row, "fields")), s.num_fields,
                         s.nonsplit_field_components == 0 ? std::optional<Count>(2 * g.num_fields) : std::nullopt,
                         field(row, "note")});
    rep.cells.push_back({label, "", "cayley", std::stoll(field(row, "cayley")), s.num_cayley, g.num_quaternion,
                         field(row, "note")});
  }
  return rep;
}

TableReport check_cases(std::uint64_t brute_ceiling) {
  TableReport rep{"cases", {}};
  for (const auto& row : parse_tsv(fixture_text("cases"))) {
    const Family fam = parse_family(field(row, "family"));
    const auto& fld = field(row, "field");
    std::vector<FieldSpec> fields;
    if (fld == "Q" || fld == "K") fields.push_back(FieldSpec::rationals());
    if (fld == "F" || fld == "K") {
      fields.push_back(FieldSpec::finite(3));
      fields.push_back(FieldSpec::finite(11));
    }
    for (const auto& b : expand_ranges(field(row, "ranges"), field(row, "require"))) {
      std::vector<int> ms;
      for (const auto& m : split(field(row, "ms"), ',')) ms.push_back(static_cast<int>(eval_expr(m, b)));
      const auto spec = GroupSpec::make(fam, ms);
      const bool small = spec.log2_order() <= 62 && (std::uint64_t{1} << spec.log2_order()) <= brute_ceiling;
      for (const auto& k : fields) {
        const auto d = decompose(spec, k);
        std::optional<DecompositionSummary> bd;
        if (small) bd = decompose_brute(spec, k, brute_ceiling);
        const std::string label = field(row, "id") + " " + spec.name();
        const std::string params = params_string(b) + (params_string(b).empty() ? "" : ",") + "K=" + k.tag();
        if (field(row, "fields") != "-")
          rep.cells.push_back({label, params, "fields", eval_expr(field(row, "fields"), b), d.num_fields,
                               bd ? std::optional<Count>(bd->num_fields) : std::nullopt, field(row, "note")});
        if (field(row, "quaternions") != "-")
          rep.cells.push_back({label, params, "quaternions", eval_expr(field(row, "quaternions"), b), d.num_quaternion,
                               bd ? std::optional<Count>(bd->num_quaternion) : std::nullopt, field(row, "note")});
      }
    }
  }
  return rep;
}

std::string tab1_tsv(const TableReport& r) {
  std::ostringstream out;
  out << "Group\tNumber of Q-classes\tNumber of F-classes\n";
  for (std::size_t i = 0; i + 1 < r.cells.size(); i += 2) {
    const auto& q = r.cells[i];
    const auto& f = r.cells[i + 1];
    out << q.row << (q.params.empty() ? "" : " [" + q.params + "]") << '\t' << q.derived << '\t' << f.derived << '\n';
  }
  return out.str();
}

std::string report_tsv(const TableReport& r) {
  std::ostringstream out;
  out << "row\tparams\tcolumn\tstated\tderived\tbrute\tstatus\tnote\n";
  for (const auto& c : r.cells) {
    const char* status = !c.oracle_agrees() ? "oracle-mismatch"
                         : c.matches_stated() ? "ok"
                         : c.note.empty()    ? "stated-mismatch"
                                             : "annotated";
    out << c.row << '\t' << c.params << '\t' << c.column << '\t' << c.stated << '\t' << c.derived << '\t'
        << (c.brute ? str(*c.brute) : "-") << '\t' << status << '\t' << c.note << '\n';
  }
  return out.str();
}

}  // namespace gralg
