#include "gralg/expr.hpp"
#include "gralg/tables.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace gralg;

TEST_CASE("expression evaluator") {
  const Bindings v{{"a", 5}, {"b", 3}, {"m1", 4}};
  CHECK(eval_expr("2^(b+1)*(3+a-b)-4", v) == 76);
  CHECK(eval_expr("-2^3", v) == -8);
  CHECK(eval_expr("(-2)^2", v) == 4);
  CHECK(eval_expr("2^2^3", v) == 256);  // right associative
  CHECK(eval_expr("10-4-3", v) == 3);
  CHECK(eval_expr("a*b - m1", v) == 11);
  CHECK(eval_expr("a==5", v) == 1);
  CHECK(eval_expr("a!=5", v) == 0);
  CHECK(eval_expr("b<a", v) == 1);
  CHECK(eval_expr("b>=a", v) == 0);
  CHECK(eval_expr("2^100", {}) == Count(1) << 100);

  CHECK_THROWS_AS(eval_expr("a+", v), DomainError);
  CHECK_THROWS_AS(eval_expr("(a", v), DomainError);
  CHECK_THROWS_AS(eval_expr("z", v), DomainError);
  CHECK_THROWS_AS(eval_expr("2^(0-1)", v), DomainError);
  CHECK_THROWS_AS(eval_expr("a b", v), DomainError);
}

TEST_CASE("tsv parsing") {
  const auto rows = parse_tsv("x\ty\tz\n1\t2\t3\n\n4\t5\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("y") == "2");
  CHECK(rows[1].at("x") == "4");
  CHECK(rows[1].at("z").empty());
  CHECK(parse_tsv("").empty());
  CHECK_THROWS(fixture_text("nope"));
}

TEST_CASE("fixtures are well formed") {
  for (const char* name : {"tab1", "tab2", "cases"}) {
    const auto rows = parse_tsv(fixture_text(name));
    CHECK_MESSAGE(!rows.empty(), name);
  }
  CHECK(parse_tsv(fixture_text("tab1")).size() == 48);
  CHECK(parse_tsv(fixture_text("tab2")).size() == 8);

  std::set<std::string> ids;
  for (const auto& r : parse_tsv(fixture_text("cases"))) {
    CHECK_MESSAGE(ids.insert(r.at("id")).second, r.at("id"));
    CHECK(!r.at("family").empty());
    const auto& k = r.at("field");
    CHECK((k == "Q" || k == "F" || k == "K"));
  }
}

TEST_CASE("abelian table reproduces exactly") {
  const TableReport r = check_tab1();
  CHECK(r.cells.size() == 536);
  CHECK(r.stated_mismatches() == 0);
  CHECK(r.oracle_failures() == 0);
  CHECK(r.brute_checked() > 300);

  // Figures read off the table directly.
  auto find = [&](const std::string& row, const std::string& params, const std::string& col) {
    for (const auto& c : r.cells)
      if (c.row == row && c.params == params && c.column == col) return c.derived;
    FAIL("missing cell " << row << " " << params << " " << col);
    return Count(-1);
  };
  CHECK(find("C_4 x C_4", "", "Q-classes") == 10);
  CHECK(find("C_8 x C_2", "", "F-classes") == 10);
}

TEST_CASE("loop table: only the annotated row disagrees") {
  const TableReport r = check_tab2();
  CHECK(r.ok());
  CHECK(r.oracle_failures() == 0);
  CHECK(r.brute_checked() == r.cells.size());
  for (const auto& c : r.cells) {
    if (c.matches_stated()) continue;
    CHECK(c.row.rfind("L_8 ", 0) == 0);
    CHECK(c.note.rfind("erratum", 0) == 0);
  }
  CHECK(r.stated_mismatches() == 2);
}

TEST_CASE("case statements: every disagreement is annotated, enumeration agrees") {
  const TableReport r = check_cases();
  CHECK(r.ok());
  CHECK(r.unexplained_mismatches() == 0);
  CHECK(r.oracle_failures() == 0);
  CHECK(r.brute_checked() > 500);
  for (const auto& c : r.cells)
    if (!c.matches_stated()) CHECK_MESSAGE(!c.note.empty(), c.row << " " << c.params);
}

TEST_CASE("report formats") {
  const TableReport r = check_tab1(4, 256);
  const std::string t = tab1_tsv(r);
  CHECK(t.rfind("Group\tNumber of Q-classes\tNumber of F-classes\n", 0) == 0);

  const std::string rep = report_tsv(check_tab2());
  std::istringstream in(rep);
  std::string line;
  std::getline(in, line);
  CHECK(line == "row\tparams\tcolumn\tstated\tderived\tbrute\tstatus\tnote");
  std::size_t annotated = 0, rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.find("\tannotated\t") != std::string::npos) ++annotated;
  }
  CHECK(rows == 16);
  CHECK(annotated == 2);
  CHECK(report_tsv(check_tab2()) == rep);
}
