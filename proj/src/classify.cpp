#include "gralg/classify.hpp"

#include "gralg/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace gralg {

namespace {

std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

// Exponents r generating the Galois action on elements of order dividing 2^e.
std::vector<std::int64_t> galois_exponents(int e, const FieldSpec& field) {
  const std::uint64_t mod = std::uint64_t{1} << e;
  if (field.is_finite()) return {static_cast<std::int64_t>(field.order() % mod)};
  return {-1, 5};
}

// Union-find over G: conjugation by x, y and the Galois power maps; optionally also g ~ sg.
std::vector<std::uint32_t> class_labels(const Group& g, const FieldSpec& field, std::uint32_t n, bool mod_commutator) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  int max_m = 0;
  for (int m : g.spec().ms) max_m = std::max(max_m, m);
  // exp(G) divides 2^{max m_i + 1}.
  const auto rs = galois_exponents(max_m + 1, field);
  const GroupElement x = g.x(), y = g.y(), s = g.s();
  const GroupElement xi = g.inverse(x), yi = g.inverse(y);
  for (std::uint32_t i = 0; i < n; ++i) {
    const GroupElement e = g.element(i);
    unite(parent, i, g.index(g.multiply(g.multiply(xi, e), x)));
    unite(parent, i, g.index(g.multiply(g.multiply(yi, e), y)));
    for (std::int64_t r : rs) unite(parent, i, g.index(g.power(e, r)));
    if (mod_commutator) unite(parent, i, g.index(g.multiply(s, e)));
  }
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = find(parent, i);
  return parent;
}

std::string quantity_name(const FieldSpec& f, const char* suffix) {
  return std::string(f.is_rational() ? "N" : "M") + suffix;
}

void require_min(const GroupSpec& spec, int lo) {
  for (int m : spec.ms)
    if (m < lo)
      throw OutOfRange("theorem for " + std::string(family_name(spec.family)) + " needs every m_i >= " +
                       std::to_string(lo) + "; got " + spec.name());
}

// Q-side parts for the families whose theorem defines N via the centre and cosets.
// Types of the subquotients are worked out by hand per family.
struct HandTypes {
  std::vector<int> centre, centre_mod_s, x, y, xy, abelianization;
};

HandTypes hand_types(const GroupSpec& spec) {
  const auto& m = spec.ms;
  switch (spec.family) {
    case Family::D4: {
      const int lo = std::min(m[0] - 1, m[1]);
      return {{m[0], m[1]},          {m[0] - 1, m[1]},      {m[0], m[1]},
              {m[0] - 1, m[1] + 1},  {lo, m[0] + m[1] - lo}, {m[0], m[1] + 1}};
    }
    case Family::D5:
    case Family::D5xC: {
      HandTypes h{{m[0], m[1], m[2]},
                  {m[0] - 1, m[1], m[2]},
                  {m[0] - 1, m[1] + 1, m[2]},
                  {m[0] - 1, m[1], m[2] + 1},
                  {m[0] - 1, std::min(m[1], m[2]), std::max(m[1], m[2]) + 1},
                  {m[0] - 1, m[1] + 1, m[2] + 1}};
      if (spec.family == Family::D5xC)
        for (auto* v : {&h.centre, &h.centre_mod_s, &h.x, &h.y, &h.xy, &h.abelianization}) v->push_back(m[3]);
      return h;
    }
    default: throw OutOfRange("no per-coset theorem data for " + spec.name());
  }
}

Count cyc(const std::vector<int>& exps) { return cyclic_subgroup_count(TwoAdicExponents(exps)); }

}  // namespace

ClassCountBreakdown brute_force_breakdown(const GroupSpec& spec, const FieldSpec& field, std::uint64_t ceiling) {
  const Group g(spec);
  const std::uint32_t n = g.enumerable_size(ceiling);
  const auto labels = class_labels(g, field, n, false);
  Count parts[4] = {0, 0, 0, 0};
  for (std::uint32_t i = 0; i < n; ++i) {
    if (labels[i] != i) continue;
    const GroupElement e = g.element(i);
    parts[e.dx + 2 * e.dy] += 1;
  }
  const auto ab_labels = class_labels(g, field, n, true);
  Count n0 = 0;
  for (std::uint32_t i = 0; i < n; ++i) n0 += ab_labels[i] == i;
  ClassCountBreakdown out{field, parts[0], parts[1], parts[2], parts[3], n0, 0};
  out.total = parts[0] + parts[1] + parts[2] + parts[3];
  return out;
}

Count k_class_count_group(const GroupSpec& spec, const FieldSpec& field, std::uint64_t ceiling) {
  const Group g(spec);
  const std::uint32_t n = g.enumerable_size(ceiling);
  const auto labels = class_labels(g, field, n, false);
  Count count = 0;
  for (std::uint32_t i = 0; i < n; ++i) count += labels[i] == i;
  return count;
}

ClassCountBreakdown pipeline_breakdown(const GroupSpec& spec, const FieldSpec& field) {
  const Count z_mod_s = k_class_count(center_mod_commutator(spec), field);
  ClassCountBreakdown out{field};
  out.n_center = k_class_count(center(spec), field);
  out.n_x = k_class_count(coset_subquotient(spec, Coset::X), field) - z_mod_s;
  out.n_y = k_class_count(coset_subquotient(spec, Coset::Y), field) - z_mod_s;
  out.n_xy = k_class_count(coset_subquotient(spec, Coset::XY), field) - z_mod_s;
  out.n_abelianization = k_class_count(abelianization(spec), field);
  out.total = *out.n_center + *out.n_x + *out.n_y + *out.n_xy;
  return out;
}

std::optional<int> theorem_offset(Family f) {
  switch (f) {
    case Family::D3: return 20;
    case Family::D4: return 10;
    case Family::D5: return 36;
    case Family::D5xC: return 136;
    default: return std::nullopt;
  }
}

ClassCountBreakdown theorem_predict(const GroupSpec& spec, const FieldSpec& field) {
  if (field.is_finite() && field.order() % 8 != 3)
    throw OutOfRange("over F_q the theorems give exact counts only for q = 3 (mod 8); got q = " +
                     std::to_string(field.order()));
  const bool q = field.is_rational();
  const auto& m = spec.ms;
  ClassCountBreakdown out{field};
  switch (spec.family) {
    case Family::D1:
      require_min(spec, 2);
      out.n_abelianization = q ? 4 * m[0] : 8 * m[0] - 12;
      out.total = out.n_abelianization + (q ? 1 : 2);
      return out;
    case Family::D2:
      require_min(spec, 3);
      out.n_abelianization = q ? 2 * m[0] + 2 : 4 * m[0] - 2;
      out.total = out.n_abelianization + (q ? 1 : 2);
      return out;
    case Family::D3: {
      require_min(spec, 3);
      const int m1 = m[0], m2 = m[1];
      const unsigned u1 = static_cast<unsigned>(m1), u2 = static_cast<unsigned>(m2);
      Count n, n0;
      if (m1 - 1 >= m2 + 1) {
        n = pow2(u2) * (5 + 4 * m1 - 4 * m2) - 4;
        n0 = pow2(u2 + 2) * (1 + m1 - m2) - 4;
      } else if (m2 == m1 - 1) {
        n = 9 * pow2(u2) - 4;
        n0 = 8 * pow2(u2) - 4;
      } else {
        n = pow2(u1 - 1) * (12 + 3 * m2 - 3 * m1) - 4;
        n0 = pow2(u1) * (5 + m2 - m1) - 4;
      }
      out.total = q ? n : 2 * n - 20;
      out.n_abelianization = q ? n0 : 2 * n0 - 20;
      return out;
    }
    case Family::D4:
    case Family::D5:
    case Family::D5xC: {
      require_min(spec, 3);
      const HandTypes h = hand_types(spec);
      const Count zs = cyc(h.centre_mod_s);
      const Count n1 = cyc(h.centre), n2 = cyc(h.x) - zs, n3 = cyc(h.y) - zs, n4 = cyc(h.xy) - zs;
      const Count n = n1 + n2 + n3 + n4, n0 = cyc(h.abelianization);
      if (q) {
        out.n_center = n1;
        out.n_x = n2;
        out.n_y = n3;
        out.n_xy = n4;
        out.total = n;
        out.n_abelianization = n0;
      } else {
        const int c = *theorem_offset(spec.family);
        out.total = 2 * n - c;
        out.n_abelianization = 2 * n0 - c;
      }
      return out;
    }
  }
  throw OutOfRange("unknown family");
}

bool DiscrepancyReport::oracle_pipeline_agree() const {
  for (const auto& q : quantities)
    if (q.oracle && q.pipeline && *q.oracle != *q.pipeline) return false;
  return true;
}

bool DiscrepancyReport::theorem_agrees() const {
  for (const auto& q : quantities) {
    if (!q.theorem) continue;
    if (q.oracle && *q.oracle != *q.theorem) return false;
    if (q.pipeline && *q.pipeline != *q.theorem) return false;
  }
  return true;
}

DiscrepancyReport discrepancy_report(const GroupSpec& spec, const FieldSpec& field, std::uint64_t ceiling) {
  DiscrepancyReport rep{spec, field};
  std::optional<ClassCountBreakdown> oracle, theorem;
  try {
    oracle = brute_force_breakdown(spec, field, ceiling);
    rep.oracle_ran = true;
  } catch (const CeilingExceeded& e) {
    rep.notes.push_back(std::string("oracle skipped: ") + e.what());
  }
  const ClassCountBreakdown pipeline = pipeline_breakdown(spec, field);
  try {
    theorem = theorem_predict(spec, field);
    rep.theorem_applies = true;
  } catch (const OutOfRange& e) {
    rep.notes.push_back(std::string("theorem not applicable: ") + e.what());
  }

  auto add = [&](const char* suffix, auto member) {
    QuantityComparison qc{quantity_name(field, suffix)};
    if (oracle) qc.oracle = member(*oracle);
    qc.pipeline = member(pipeline);
    if (theorem) qc.theorem = member(*theorem);
    std::optional<Count> first;
    for (const auto* v : {&qc.oracle, &qc.pipeline, &qc.theorem}) {
      if (!*v) continue;
      if (!first) first = **v;
      else if (**v != *first) qc.agree = false;
    }
    rep.quantities.push_back(std::move(qc));
  };
  add("1", [](const ClassCountBreakdown& b) { return b.n_center; });
  add("2", [](const ClassCountBreakdown& b) { return b.n_x; });
  add("3", [](const ClassCountBreakdown& b) { return b.n_y; });
  add("4", [](const ClassCountBreakdown& b) { return b.n_xy; });
  add("0", [](const ClassCountBreakdown& b) { return std::optional<Count>(b.n_abelianization); });
  add("", [](const ClassCountBreakdown& b) { return std::optional<Count>(b.total); });
  return rep;
}

}  // namespace gralg
