// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include "gralg/codes.hpp"
#include "gralg/raloops.hpp"
#include "gralg/tables.hpp"
#include "grids.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace gralg;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

const FieldSpec Q = FieldSpec::rationals();
FieldSpec F(std::uint64_t q) { return FieldSpec::finite(q); }

std::string str(const Count& c) { return c.str(); }

// Order of q in the units mod 2^r by repeated multiplication.
std::uint64_t naive_order(std::uint64_t q, int r) {
  const std::uint64_t mod = std::uint64_t{1} << r;
  std::uint64_t x = q % mod, k = 1;
  while (x != 1) {
    x = x * q % mod;
    ++k;
  }
  return k;
}

void c1(Result& r) {
  const TableReport t = check_tab1(8, std::uint64_t{1} << 12);
  r.expect(t.stated_mismatches() == 0, std::to_string(t.stated_mismatches()) + " cells differ from the table");
  r.expect(t.oracle_failures() == 0, std::to_string(t.oracle_failures()) + " enumeration disagreements");
  r.expect(t.brute_checked() > 0, "no cell was brute-forced");
  r.detail << t.cells.size() << " cells, " << t.brute_checked() << " also by enumeration, 0 flagged";
}

void c2(Result& r) {
  std::uint64_t pairs = 0;
  for (int rr = 3; rr <= 12; ++rr) {
    const std::uint64_t bound = std::uint64_t{1} << (rr - 2);
    for (std::uint64_t q = 3; q < (std::uint64_t{1} << rr); q += 2) {
      const std::uint64_t o = naive_order(q, rr);
      ++pairs;
      r.expect(o == order_mod_power_of_two(q, rr), "library order differs at q=" + std::to_string(q));
      r.expect(o <= bound, "order above 2^(r-2) at q=" + std::to_string(q) + " r=" + std::to_string(rr));
      if (q % 8 == 3) r.expect(o == bound, "q = 3 mod 8 below 2^(r-2) at q=" + std::to_string(q));
    }
  }
  r.detail << pairs << " (r, q) pairs";
}

void c3(Result& r) {
  for (int m = 1; m <= 10; ++m) {
    const AbelianType c{m};
    r.expect(q_class_count(c) == m + 1, "Q-count C_2^" + std::to_string(m));
    r.expect(k_class_count_brute(c, Q) == static_cast<std::uint64_t>(m + 1), "brute Q-count C_2^" + std::to_string(m));
    if (m < 2) continue;
    for (std::uint64_t q : {3, 11, 19}) {
      r.expect(k_class_count(c, q) == 2 * m - 1, "F-count C_2^" + std::to_string(m) + " q=" + std::to_string(q));
      r.expect(k_class_count_brute(c, F(q)) == static_cast<std::uint64_t>(2 * m - 1),
               "brute F-count C_2^" + std::to_string(m) + " q=" + std::to_string(q));
    }
  }
  r.detail << "m = 1..10, q in {3, 11, 19}";
}

std::vector<GroupSpec> c4_grid() {
  std::vector<GroupSpec> g;
  for (int m = 2; m <= 8; ++m) g.push_back(GroupSpec::make(Family::D1, {m}));
  for (int m = 3; m <= 8; ++m) g.push_back(GroupSpec::make(Family::D2, {m}));
  for (auto& s : grid::family(Family::D3, 3, 6)) g.push_back(s);
  for (auto& s : grid::family(Family::D4, 3, 6)) g.push_back(s);
  for (auto& s : grid::family(Family::D5, 3, 4)) g.push_back(s);
  g.push_back(GroupSpec::make(Family::D5xC, {3, 3, 3, 3}));
  return g;
}

void c4(Result& r) {
  std::size_t theorem_cells = 0, brute_cells = 0, excluded = 0;
  for (const GroupSpec& s : c4_grid()) {
    for (const FieldSpec& f : {Q, F(3), F(11), F(19)}) {
      const auto p = pipeline_breakdown(s, f);
      // The finite-field closed form for D1 is derived for m >= 3; at m = 2 it does not
      // match the 8 fields + 1 quaternion that enumeration gives.
      if (s.family == Family::D1 && s.ms[0] == 2 && f.is_finite()) {
        ++excluded;
      } else {
        const auto t = theorem_predict(s, f);
        ++theorem_cells;
        r.expect(t.total == p.total && t.n_abelianization == p.n_abelianization,
                 "theorem vs pipeline " + s.name() + " " + f.tag());
      }
      if (s.log2_order() <= 10) {
        const auto b = brute_force_breakdown(s, f);
        ++brute_cells;
        r.expect(b == p, "pipeline vs enumeration " + s.name() + " " + f.tag());
      }
    }
  }
  for (int m = 2; m <= 8; ++m) {
    const auto s = GroupSpec::make(Family::D1, {m});
    const auto dq = decompose(s, Q);
    r.expect(dq.num_fields == 4 * m && dq.num_quaternion == 1, "D1 over Q, m=" + std::to_string(m));
    if (m >= 3) {
      const auto df = decompose(s, F(3));
      r.expect(df.num_fields == 8 * m - 12 && df.num_quaternion == 2, "D1 over F_3, m=" + std::to_string(m));
    }
  }
  r.detail << theorem_cells << " theorem cells, " << brute_cells << " enumeration cells; excluded " << excluded
           << " annotated cells (D1(2) over F_q, closed form stated for m >= 3)";
}

void c5(Result& r) {
  std::size_t groups = 0;
  for (const GroupSpec& s : c4_grid()) {
    if (s.log2_order() > 10) continue;
    ++groups;
    std::map<std::uint64_t, Count> k;
    for (std::uint64_t q : {3, 11, 19, 5, 7, 9, 13, 17}) k[q] = k_class_count_group(s, F(q));
    for (std::uint64_t lo : {3, 11, 19}) {
      r.expect(k[lo] == k[3], s.name() + ": q=3 mod 8 counts differ");
      for (std::uint64_t hi : {5, 7, 9, 13, 17})
        r.expect(k[lo] <= k[hi], s.name() + " q=" + std::to_string(lo) + " vs " + std::to_string(hi));
    }
  }
  r.detail << groups << " groups, 8 fields each";
}

void c6(Result& r) {
  std::size_t loops = 0, counted = 0;
  for (const LoopSpec& l : grid::loops(9)) {
    ++loops;
    const MoufangReport m = check_moufang_exhaustive(l, 512);
    r.expect(m.moufang_failures == 0, l.name() + ": right Moufang fails");
    r.expect(m.nonassociative_triples > 0, l.name() + ": associative");
    if (l.cls == LoopClass::L6 || l.cls == LoopClass::L7) continue;
    for (const FieldSpec& f : {Q, F(3)}) {
      const auto ld = loop_decompose(l, f);
      const auto gd = decompose_brute(l.group(), f);
      ++counted;
      r.expect(ld.num_fields == 2 * gd.num_fields && ld.num_cayley == gd.num_quaternion,
               l.name() + " " + f.tag() + ": " + str(ld.num_fields) + "+" + str(ld.num_cayley));
    }
  }
  r.detail << loops << " loops with |L| <= 512 checked exhaustively; " << counted << " (loop, field) count pairs";
}

void c7(Result& r) {
  const auto c = compare_loops(LoopSpec::make(LoopClass::L5, {1, 2, 1}), LoopSpec::make(LoopClass::L6, {1, 2, 1}), Q);
  r.expect(c.counts_equal && c.a.num_fields == 28 && c.a.num_cayley == 6,
           "L5(1,2,1) vs L6(1,2,1): " + str(c.a.num_fields) + "+" + str(c.a.num_cayley));

  const TableReport t = check_tab2();
  std::size_t exact = 0, annotated = 0;
  for (const auto& cell : t.cells) {
    r.expect(cell.oracle_agrees(), cell.row + " " + cell.column + ": enumeration differs");
    if (cell.matches_stated()) ++exact;
    else if (!cell.note.empty()) ++annotated;
    else r.expect(false, cell.row + " " + cell.column + " differs from the table");
  }

  const auto o32 = compare_loops(LoopSpec::make(LoopClass::L3, {1, 1}), LoopSpec::make(LoopClass::L4, {1, 1}), Q);
  r.expect(o32.counts_equal && o32.split_caveat, "order 32 L3/L4: counts or caveat");
  const auto o64 = compare_loops(LoopSpec::make(LoopClass::L3, {1, 2}), LoopSpec::make(LoopClass::L4, {1, 2}), Q);
  r.expect(o64.counts_equal && o64.split_caveat, "order 64 L3(1,2)/L4(1,2): counts or caveat");

  r.detail << "28+6 equal; table cells " << exact << " exact, " << annotated
           << " on the annotated L4(2,1) row (checked against 20+2); order-32 and order-64 L3/L4 pairs flagged";
}

void c8(Result& r) {
  std::size_t pairs = 0;
  for (int n = 0; n <= 8; ++n) {
    // Partitions of n into parts of size >= 1, non-increasing.
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& parts, int left, int max) {
      if (left == 0) {
        const AbelianType a{TwoAdicExponents(parts)};
        for (std::uint64_t q : {3, 5, 7, 9, 11}) {
          ++pairs;
          const auto codes = primitive_idempotents(a, q);
          const auto rep = verify_idempotents(a, q, codes);
          r.expect(rep.ok(), a.to_string() + " q=" + std::to_string(q) + ": idempotent identities");
          DegreeMultiset dims, cosets;
          for (const auto& code : codes) dims[code.dimension] += 1;
          for (const auto& coset : cyclotomic_cosets(a, q)) cosets[coset.size()] += 1;
          r.expect(dims == field_degrees(a, q), a.to_string() + " q=" + std::to_string(q) + ": dims vs degrees");
          r.expect(cosets == field_degrees(a, q), a.to_string() + " q=" + std::to_string(q) + ": cosets vs degrees");
        }
        return;
      }
      for (int p = std::min(left, max); p >= 1; --p) {
        parts.push_back(p);
        rec(parts, left - p, p);
        parts.pop_back();
      }
    };
    std::vector<int> parts;
    rec(parts, n, n);
  }
  std::multiset<std::uint64_t> c4;
  for (const auto& code : primitive_idempotents(AbelianType{2}, 3)) c4.insert(code.dimension);
  r.expect(c4 == std::multiset<std::uint64_t>{1, 1, 2}, "C_4 over F_3 dimensions");
  r.detail << pairs << " (type, q) pairs; C_4 over F_3 gives {1,1,2}";
}

void c9(Result& r) {
  struct Expect {
    LoopSpec spec;
    int fields;
    int cayley;  // -1: not stated
  };
  const std::vector<Expect> stated{
      {LoopSpec::make(LoopClass::L1, {1}), 8, 1},       {LoopSpec::make(LoopClass::L2, {1}), 8, 1},
      {LoopSpec::make(LoopClass::L1, {2}), 16, -1},     {LoopSpec::make(LoopClass::L2, {2}), 12, 1},
      {LoopSpec::make(LoopClass::L3, {1, 1}), 12, 2},   {LoopSpec::make(LoopClass::L4, {1, 1}), 12, 2},
      {LoopSpec::make(LoopClass::L5, {1, 2, 1}), 28, 6}, {LoopSpec::make(LoopClass::L6, {1, 2, 1}), 28, 6},
  };
  std::size_t counts = 0;
  for (const auto& e : stated) {
    const auto d = loop_decompose(e.spec, Q);
    ++counts;
    r.expect(d.num_fields == e.fields, e.spec.name() + " fields " + str(d.num_fields));
    if (e.cayley >= 0) {
      ++counts;
      r.expect(d.num_cayley == e.cayley, e.spec.name() + " Cayley " + str(d.num_cayley));
    }
  }

  // Table rows: published figures, except the row whose figures violate the dimension bound.
  std::size_t corrected = 0;
  for (const auto& row : parse_tsv(fixture_text("tab2"))) {
    std::vector<int> ms;
    std::istringstream in(row.at("ms"));
    for (std::string tok; std::getline(in, tok, ',');) ms.push_back(std::stoi(tok));
    const LoopSpec spec = LoopSpec::make(parse_loop_class(row.at("class")), ms);
    const auto d = loop_decompose(spec, Q);
    const Count fields(row.at("fields")), cayley(row.at("cayley"));
    counts += 2;
    if (row.at("note").empty()) {
      r.expect(d.num_fields == fields && d.num_cayley == cayley, row.at("loop") + " " + spec.name());
      continue;
    }
    // The field part of QL has dimension 2|G/G'| = |G|, leaving |G| for the Cayley
    // algebras, each of dimension at least 8.
    const Count g = pow2(static_cast<unsigned>(spec.group().log2_order()));
    r.expect(8 * cayley > g, row.at("loop") + ": annotated figures are not ruled out by dimension");
    r.expect(d.num_fields == 20 && d.num_cayley == 2, row.at("loop") + ": corrected 20+2");
    r.expect(8 * d.num_cayley <= g, row.at("loop") + ": derived figures break the dimension bound");
    ++corrected;
  }
  r.detail << counts << " rational counts reproduced by the square rule; " << corrected
           << " table row compared against its corrected value (stated 6 Cayley algebras need 48 > 32 dimensions)";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Result&)>> criteria{
      {"1 abelian table", c1},        {"2 order of q mod 2^r", c2}, {"3 cyclic groups", c3},
      {"4 family theorems", c4},      {"5 minimality", c5},         {"6 loop identities", c6},
      {"7 loop comparisons", c7},     {"8 codes", c8},              {"9 rational split rule", c9},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(r);
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  C" << name << "  [" << r.detail.str() << "] (" << std::fixed
              << std::setprecision(1) << secs << "s)\n";
    for (const auto& f : r.failures) std::cout << "      " << f << '\n';
  }
  return all ? 0 : 1;
}
