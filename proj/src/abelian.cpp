#include "gralg/abelian.hpp"

#include "gralg/kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace gralg {

namespace {

using Matrix = std::vector<std::vector<Count>>;

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// col[dst] -= f * col[src]
void sub_col(Matrix& m, std::size_t dst, std::size_t src, const Count& f) {
  for (auto& row : m) row[dst] -= f * row[src];
}

void sub_row(Matrix& m, std::size_t dst, std::size_t src, const Count& f) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= f * m[src][j];
}

// Truncating division is enough: any remainder is smaller than the pivot, which then
// gets replaced.
Count quot(const Count& a, const Count& b) { return a / b; }

int log2_exact(const Count& d) {
  if (d <= 0) throw DomainError("presentation defines an infinite group");
  const unsigned bits = boost::multiprecision::msb(d);
  if (d != pow2(bits)) throw DomainError("presentation has elements of odd order (invariant factor " + d.str() + ")");
  return static_cast<int>(bits);
}

std::uint64_t reduce(const Count& v, int e) {
  const Count m = pow2(static_cast<unsigned>(e));
  Count r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

kernels::PowerOfTwoLayout layout_for(const AbelianType& a, std::uint64_t ceiling, const char* what) {
  if (a.log2_order() > 31) throw CeilingExceeded(what, UINT64_MAX, ceiling);
  const std::uint64_t n = std::uint64_t{1} << a.log2_order();
  if (n > ceiling) throw CeilingExceeded(what, n, ceiling);
  return kernels::PowerOfTwoLayout::packed(a.exps().exps());
}

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
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent[a] = b;
}

// Generators of the Galois action on elements of exponent 2^E: q for F_q; for Q the
// whole unit group of Z/2^E, generated by -1 and 5.
std::vector<std::uint64_t> galois_generators(const AbelianType& a, const FieldSpec& field) {
  const int e = a.exponent_log2();
  if (e == 0) return {};
  const std::uint64_t mod = std::uint64_t{1} << e;
  if (field.is_finite()) return {field.order() % mod};
  return {mod - 1, 5 % mod};
}

int element_log2_order(const kernels::PowerOfTwoLayout& layout, std::uint32_t index) {
  int best = 0;
  for (std::size_t c = 0; c < layout.widths.size(); ++c) {
    const std::uint32_t w = layout.widths[c];
    const std::uint32_t v = (index >> layout.offsets[c]) & ((1u << w) - 1);
    if (v == 0) continue;
    best = std::max(best, static_cast<int>(w) - std::countr_zero(v));
  }
  return best;
}

}  // namespace

std::string AbelianType::to_string() const {
  if (exps_.trivial()) return "1";
  std::string out;
  for (int e : exps_.exps()) {
    if (!out.empty()) out += " x ";
    out += "C_" + pow2(static_cast<unsigned>(e)).str();
  }
  return out;
}

AbelianElement SmithReduction::project(std::span<const std::int64_t> word) const {
  if (word.size() != projection.size()) throw DomainError("project: word length does not match generator count");
  const auto& e = type.exps().exps();
  AbelianElement out{std::vector<std::uint64_t>(e.size(), 0)};
  for (std::size_t i = 0; i < e.size(); ++i) {
    Count acc = 0;
    for (std::size_t g = 0; g < word.size(); ++g) acc += Count{word[g]} * projection[g][i];
    out.coords[i] = reduce(acc, e[i]);
  }
  return out;
}

SmithReduction smith_decompose(const AbelianPresentation& p) {
  const std::size_t n = p.num_generators;
  Matrix a;
  for (const auto& rel : p.relations) {
    if (rel.size() != n) throw DomainError("relation length does not match generator count");
    a.emplace_back(rel.begin(), rel.end());
  }
  const std::size_t m = a.size();
  // D = U A V; only V is tracked since x -> xV maps Z^n / rows(A) onto Z^n / rows(D).
  Matrix v(n, std::vector<Count>(n, 0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

  std::vector<Count> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == m) break;
      std::swap(a[t], a[pr]);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        sub_row(a, i, t, quot(a[i][t], a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const Count f = quot(a[t][j], a[t][t]);
        sub_col(a, j, t, f);
        sub_col(v, j, t, f);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple into row t and retry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    if (t >= m || a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  if (diag.size() < n) throw DomainError("presentation defines an infinite group");

  std::vector<std::size_t> kept;
  std::vector<int> exps;
  for (std::size_t j = n; j-- > 0;) {
    const int e = log2_exact(diag[j]);
    if (e == 0) continue;
    kept.push_back(j);
    exps.push_back(e);
  }
  SmithReduction out;
  out.type = AbelianType(TwoAdicExponents(exps));
  // Invariant factors divide one another, so reading columns backwards already gives
  // the descending order used by TwoAdicExponents.
  out.projection.assign(n, std::vector<std::uint64_t>(kept.size(), 0));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < kept.size(); ++i) out.projection[g][i] = reduce(v[g][kept[i]], exps[i]);
  return out;
}

AbelianType smith_reduce(const AbelianPresentation& p) { return smith_decompose(p).type; }

Count q_class_count(const AbelianType& a) { return cyclic_subgroup_count(a.exps()); }

Count k_class_count(const AbelianType& a, const FieldSpec& field) {
  if (field.is_rational()) return q_class_count(a);
  return k_class_count(a, field.order());
}

Count k_class_count(const AbelianType& a, std::uint64_t q) {
  Count total = 0;
  for (const auto& [deg, mult] : field_degrees(a, q)) total += mult;
  return total;
}

Count k_class_count_minimal_form(const AbelianType& a) {
  return 2 * cyclic_subgroup_count(a.exps()) - small_torsion_subgroup_count(a.exps());
}

DegreeMultiset field_degrees(const AbelianType& a, std::uint64_t q) {
  if (q % 2 == 0) throw DomainError("field_degrees: q must be odd");
  DegreeMultiset out;
  out[1] += 1;
  for (int k = 1; k <= a.exponent_log2(); ++k) {
    const Count c = cyclic_subgroup_count_by_order(a.exps(), k);
    const std::uint64_t d = order_mod_power_of_two(q, k);
    // phi(2^k) generators per cyclic subgroup, grouped into orbits of size d.
    const Count comps = c * pow2(static_cast<unsigned>(k - 1)) / d;
    if (comps != 0) out[d] += comps;
  }
  return out;
}

Count degree_sum(const DegreeMultiset& m) {
  Count s = 0;
  for (const auto& [d, c] : m) s += c * d;
  return s;
}

Count degree_count(const DegreeMultiset& m) {
  Count s = 0;
  for (const auto& [d, c] : m) s += c;
  return s;
}

std::vector<std::uint32_t> galois_orbit_labels(const AbelianType& a, const FieldSpec& field, std::uint64_t ceiling) {
  const auto layout = layout_for(a, ceiling, "galois_orbit_labels");
  const std::uint64_t n = layout.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::vector<std::uint32_t> image(n);
  for (std::uint64_t r : galois_generators(a, field)) {
    kernels::frobenius_map(layout, r, image);
    for (std::uint32_t i = 0; i < n; ++i) unite(parent, i, image[i]);
  }
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = find(parent, i);
  return parent;
}

std::uint64_t k_class_count_brute(const AbelianType& a, const FieldSpec& field, std::uint64_t ceiling) {
  const auto labels = galois_orbit_labels(a, field, ceiling);
  std::uint64_t count = 0;
  for (std::uint32_t i = 0; i < labels.size(); ++i) count += labels[i] == i;
  return count;
}

DegreeMultiset field_degrees_brute(const AbelianType& a, std::uint64_t q, std::uint64_t ceiling) {
  const auto labels = galois_orbit_labels(a, FieldSpec::finite(q), ceiling);
  std::map<std::uint32_t, std::uint64_t> sizes;
  for (std::uint32_t l : labels) ++sizes[l];
  DegreeMultiset out;
  for (const auto& [label, size] : sizes) out[size] += 1;
  return out;
}

Count cyclic_subgroup_count_brute(const AbelianType& a, std::uint64_t ceiling) {
  return k_class_count_brute(a, FieldSpec::rationals(), ceiling);
}

Count cyclic_subgroup_count_by_order_brute(const AbelianType& a, int k, std::uint64_t ceiling) {
  const auto layout = layout_for(a, ceiling, "cyclic_subgroup_count_by_order_brute");
  const auto labels = galois_orbit_labels(a, FieldSpec::rationals(), ceiling);
  std::uint64_t count = 0;
  for (std::uint32_t i = 0; i < labels.size(); ++i)
    if (labels[i] == i && element_log2_order(layout, i) == k) ++count;
  return count;
}

std::uint32_t element_index(const AbelianType& a, const AbelianElement& e) {
  const auto& exps = a.exps().exps();
  if (e.coords.size() != exps.size()) throw DomainError("element_index: coordinate count mismatch");
  const auto layout = kernels::PowerOfTwoLayout::packed(exps);
  std::uint32_t idx = 0;
  for (std::size_t c = 0; c < exps.size(); ++c) {
    if (e.coords[c] >> layout.widths[c]) throw DomainError("element_index: coordinate out of range");
    idx |= static_cast<std::uint32_t>(e.coords[c]) << layout.offsets[c];
  }
  return idx;
}

AbelianElement element_at(const AbelianType& a, std::uint32_t index) {
  const auto layout = kernels::PowerOfTwoLayout::packed(a.exps().exps());
  if (index >= layout.size()) throw DomainError("element_at: index out of range");
  AbelianElement e{std::vector<std::uint64_t>(layout.widths.size())};
  for (std::size_t c = 0; c < e.coords.size(); ++c)
    e.coords[c] = (index >> layout.offsets[c]) & ((std::uint64_t{1} << layout.widths[c]) - 1);
  return e;
}

}  // namespace gralg
