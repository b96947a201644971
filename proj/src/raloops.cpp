#include "gralg/raloops.hpp"

#include "gralg/codes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace gralg {

namespace {

constexpr std::array<std::string_view, 7> kLoopNames = {"L1", "L2", "L3", "L4", "L5", "L6", "L7"};

bool theorem_class(LoopClass c) { return c != LoopClass::L6 && c != LoopClass::L7; }

GroupElement random_group_element(const Group& g, std::mt19937_64& rng) {
  GroupElement e = g.identity();
  for (std::size_t i = 0; i < e.central.size(); ++i) {
    const int m = g.spec().ms[i];
    e.central[i] = rng() & (m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  e.dx = rng() & 1;
  e.dy = rng() & 1;
  return e;
}

LoopElement random_loop_element(const Group& g, std::mt19937_64& rng) {
  return {random_group_element(g, rng), static_cast<bool>(rng() & 1)};
}

// Cayley split flags over Q for the loops whose quaternion parts are settled: the
// dihedral and quaternion groups of order 8, and the order-32 and order-64 pairs with
// one representative of each known to carry only split quaternion algebras.
std::vector<CayleySplit> rational_cayley_splits(const LoopSpec& spec, const Count& num_cayley) {
  using enum CayleySplit;
  const std::size_t n = static_cast<std::size_t>(num_cayley);
  auto all = [&](CayleySplit s) { return std::vector<CayleySplit>(n, s); };
  auto one_division = [&] {
    auto v = all(Unknown);
    if (!v.empty()) v[0] = Division;
    return v;
  };
  const auto& ms = spec.ms;
  switch (spec.cls) {
    case LoopClass::L1:
      if (ms == std::vector<int>{1}) return all(Split);
      break;
    case LoopClass::L2:
      if (ms == std::vector<int>{1}) return all(Division);
      break;
    case LoopClass::L3:
      if (ms == std::vector<int>{1, 1} || ms == std::vector<int>{1, 2}) return all(Split);
      break;
    case LoopClass::L4:
      if (ms == std::vector<int>{1, 1} || ms == std::vector<int>{1, 2}) return one_division();
      break;
    case LoopClass::L5:
      if (ms == std::vector<int>{1, 1, 1}) return all(Split);
      break;
    case LoopClass::L6:
      if (ms == std::vector<int>{1, 1, 1}) return one_division();
      break;
    default:
      break;
  }
  return all(Unknown);
}

// Compatible when no component is Split on one side and Division on the other under
// every matching; with unknowns present only count mismatches of definite flags.
bool splits_incompatible(const std::vector<CayleySplit>& a, const std::vector<CayleySplit>& b) {
  if (a.size() != b.size()) return false;
  auto count = [](const std::vector<CayleySplit>& v, CayleySplit s) { return std::count(v.begin(), v.end(), s); };
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  // a needs at least count(a, Split) split slots in b, which has at most n - count(b, Division).
  return count(a, CayleySplit::Split) > n - count(b, CayleySplit::Division) ||
         count(b, CayleySplit::Split) > n - count(a, CayleySplit::Division) ||
         count(a, CayleySplit::Division) > n - count(b, CayleySplit::Split) ||
         count(b, CayleySplit::Division) > n - count(a, CayleySplit::Split);
}

}  // namespace

std::string_view loop_class_name(LoopClass c) { return kLoopNames[static_cast<std::size_t>(c)]; }

LoopClass parse_loop_class(std::string_view name) {
  for (std::size_t i = 0; i < kLoopNames.size(); ++i) {
    const auto& n = kLoopNames[i];
    if (name.size() == 2 && (name[0] == 'L' || name[0] == 'l') && name[1] == n[1]) return static_cast<LoopClass>(i);
  }
  throw DomainError("unknown loop class '" + std::string(name) + "' (expected L1..L7)");
}

Family loop_family(LoopClass c) {
  switch (c) {
    case LoopClass::L1: return Family::D1;
    case LoopClass::L2: return Family::D2;
    case LoopClass::L3: return Family::D3;
    case LoopClass::L4: return Family::D4;
    case LoopClass::L5:
    case LoopClass::L6: return Family::D5;
    case LoopClass::L7: return Family::D5xC;
  }
  throw DomainError("invalid loop class");
}

LoopSpec LoopSpec::make(LoopClass c, std::vector<int> ms) {
  GroupSpec::make(loop_family(c), ms);  // validates arity and range
  return LoopSpec{c, std::move(ms)};
}

GroupElement LoopSpec::g0() const {
  const Group g(group());
  switch (cls) {
    case LoopClass::L2:
    case LoopClass::L4:
    case LoopClass::L6: return g.t(0);
    case LoopClass::L7: return g.t(3);
    default: return g.identity();
  }
}

std::string LoopSpec::name() const {
  std::string out(loop_class_name(cls));
  out += '(';
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? "," : "") + std::to_string(ms[i]);
  return out + ')';
}

Loop::Loop(LoopSpec spec) : spec_(std::move(spec)), group_(spec_.group()), g0_(spec_.g0()) {}

GroupElement Loop::star(const GroupElement& g) const {
  return group_.is_central(g) ? g : group_.multiply(group_.s(), g);
}

LoopElement Loop::star(const LoopElement& l) const {
  if (!l.in_coset_u) return {star(l.g), false};
  return {group_.multiply(l.g, group_.s()), true};
}

LoopElement Loop::multiply(const LoopElement& a, const LoopElement& b) const {
  const Group& G = group_;
  if (!a.in_coset_u && !b.in_coset_u) return {G.multiply(a.g, b.g), false};
  if (!a.in_coset_u) return {G.multiply(b.g, a.g), true};                    // g(hu) = (hg)u
  if (!b.in_coset_u) return {G.multiply(a.g, star(b.g)), true};              // (gu)h = (gh*)u
  return {G.multiply(G.multiply(g0_, star(b.g)), a.g), false};               // (gu)(hu) = g0 h* g
}

std::uint32_t Loop::index(const LoopElement& l) const {
  const std::uint32_t i = group_.index(l.g);
  return l.in_coset_u ? i + static_cast<std::uint32_t>(group_.order()) : i;
}

LoopElement Loop::element(std::uint32_t index) const {
  const auto n = static_cast<std::uint32_t>(group_.order());
  return index < n ? LoopElement{group_.element(index), false} : LoopElement{group_.element(index - n), true};
}

std::uint32_t Loop::enumerable_size(std::uint64_t ceiling) const {
  const int log2 = spec_.group().log2_order() + 1;
  if (log2 > 31 || (std::uint64_t{1} << log2) > ceiling)
    throw CeilingExceeded("loop " + spec_.name(), log2 > 63 ? UINT64_MAX : std::uint64_t{1} << log2, ceiling);
  return std::uint32_t{1} << log2;
}

std::vector<std::uint32_t> Loop::multiplication_table(std::uint64_t ceiling) const {
  const std::uint32_t n = enumerable_size(ceiling);
  std::vector<LoopElement> elems;
  elems.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) elems.push_back(element(i));
  std::vector<std::uint32_t> table(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) table[std::size_t{i} * n + j] = index(multiply(elems[i], elems[j]));
  return table;
}

LoopElement loop_multiply(const LoopSpec& spec, const LoopElement& a, const LoopElement& b) {
  return Loop(spec).multiply(a, b);
}

MoufangReport check_moufang_exhaustive(const LoopSpec& spec, std::uint64_t ceiling) {
  const Loop loop(spec);
  const std::uint32_t n = loop.enumerable_size(ceiling);
  const auto t = loop.multiplication_table(ceiling);
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return t[std::size_t{a} * n + b]; };
  MoufangReport rep;
  rep.exhaustive = true;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t xy = mul(x, y);
      for (std::uint32_t z = 0; z < n; ++z) {
        const std::uint32_t zy = mul(z, y);
        if (mul(mul(xy, z), y) != mul(x, mul(y, zy))) ++rep.moufang_failures;
        if (mul(xy, z) != mul(x, mul(y, z))) ++rep.nonassociative_triples;
      }
      rep.triples_checked += n;
      const std::uint32_t pair[2] = {x, y};
      for (unsigned w = 0; w < 8; ++w) {
        const std::uint32_t a = pair[w & 1], b = pair[(w >> 1) & 1], c = pair[(w >> 2) & 1];
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          ++rep.diassociativity_failures;
          break;
        }
      }
      ++rep.pairs_checked;
    }
  return rep;
}

MoufangReport check_moufang_random(const LoopSpec& spec, std::uint64_t trials, std::uint64_t seed) {
  const Loop loop(spec);
  std::mt19937_64 rng(seed);
  auto mul = [&](const LoopElement& a, const LoopElement& b) { return loop.multiply(a, b); };
  MoufangReport rep;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto x = random_loop_element(loop.group(), rng);
    const auto y = random_loop_element(loop.group(), rng);
    const auto z = random_loop_element(loop.group(), rng);
    if (mul(mul(mul(x, y), z), y) != mul(x, mul(y, mul(z, y)))) ++rep.moufang_failures;
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) ++rep.nonassociative_triples;
    ++rep.triples_checked;
    const LoopElement pair[2] = {x, y};
    for (unsigned w = 0; w < 8; ++w) {
      const auto &a = pair[w & 1], &b = pair[(w >> 1) & 1], &c = pair[(w >> 2) & 1];
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        ++rep.diassociativity_failures;
        break;
      }
    }
    ++rep.pairs_checked;
  }
  return rep;
}

std::string_view cayley_split_name(CayleySplit s) {
  switch (s) {
    case CayleySplit::Split: return "split";
    case CayleySplit::Division: return "division";
    case CayleySplit::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<CharacterOrbit> character_orbits(const LoopSpec& spec, const FieldSpec& field) {
  const GroupSpec gs = spec.group();
  const SmithReduction red = smith_decompose(abelianization_presentation(gs));
  const AbelianType& a = red.type;
  if (a.log2_order() > 24)
    throw CeilingExceeded("character_orbits " + spec.name(), std::uint64_t{1} << std::min(a.log2_order(), 63),
                          std::uint64_t{1} << 24);

  std::vector<std::int64_t> word;
  for (auto c : spec.g0().central) word.push_back(static_cast<std::int64_t>(c));
  word.push_back(0);
  word.push_back(0);
  const AbelianElement g0 = red.project(word);

  const auto& exps = a.exps().exps();
  const int e_max = a.exponent_log2();
  const std::uint64_t q = field.order();
  // (n, o) -> number of characters.
  std::map<std::pair<std::uint64_t, std::uint64_t>, Count> counts;
  const std::uint32_t total = std::uint32_t{1} << a.log2_order();
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    const AbelianElement c = element_at(a, idx);
    std::uint64_t n = 1, v = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const std::uint64_t ci = c.coords[i];
      if (ci != 0) n = std::max<std::uint64_t>(n, (std::uint64_t{1} << exps[i]) >> std::countr_zero(ci));
      v += (ci * g0.coords[i]) << (e_max - exps[i]);
    }
    v &= (std::uint64_t{1} << e_max) - 1;
    const std::uint64_t o = v == 0 ? 1 : (std::uint64_t{1} << e_max) >> std::countr_zero(v);
    counts[{n, o}] += 1;
  }

  std::vector<CharacterOrbit> out;
  for (const auto& [key, num] : counts) {
    const auto [n, o] = key;
    const int log_n = std::countr_zero(n);
    std::uint64_t size;
    bool square;
    if (field.is_rational()) {
      size = n <= 2 ? 1 : n / 2;
      // Q(zeta_n) has torsion mu_n (mu_2 for n <= 2), so an element of order o is a
      // square iff o divides n / 2, or o = 1.
      square = o == 1 || o < n;
    } else {
      size = n == 1 ? 1 : order_mod_power_of_two(q, log_n);
      // chi(g0) has order o in F_{q^d}^*; it is a square iff 2o divides q^d - 1.
      const int log_2o = std::countr_zero(o) + 1;
      std::uint64_t qd = 1;
      const std::uint64_t mask = (std::uint64_t{1} << log_2o) - 1;
      for (std::uint64_t i = 0; i < size; ++i) qd = (qd * (q & mask)) & mask;
      square = qd == 1;
    }
    out.push_back({n, o, size, square, num / size});
  }
  return out;
}

LoopAlgebraSummary loop_decompose(const LoopSpec& spec, const FieldSpec& field) {
  const DecompositionSummary g = decompose(spec.group(), field);
  LoopAlgebraSummary out{spec, field};
  out.num_cayley = g.num_quaternion;
  std::optional<std::vector<CharacterOrbit>> orbits;
  try {
    orbits = character_orbits(spec, field);
  } catch (const CeilingExceeded&) {
    if (!theorem_class(spec.cls)) throw;
  }
  if (orbits) {
    DegreeMultiset degrees;
    for (const auto& o : *orbits) {
      if (o.g0_is_square) {
        out.num_fields += 2 * o.multiplicity;
        degrees[o.orbit_size] += 2 * o.multiplicity;
      } else {
        out.num_fields += o.multiplicity;
        out.nonsplit_field_components += o.multiplicity;
        degrees[2 * o.orbit_size] += o.multiplicity;
      }
    }
    if (field.is_finite()) out.field_degrees = degrees;
  } else {
    out.num_fields = 2 * g.num_fields;
    if (g.field_degrees) {
      DegreeMultiset degrees;
      for (const auto& [d, c] : *g.field_degrees) degrees[d] = 2 * c;
      out.field_degrees = degrees;
    }
  }
  if (out.num_cayley <= 4096) {
    out.cayley_splits = field.is_finite() ? std::vector<CayleySplit>(static_cast<std::size_t>(out.num_cayley), CayleySplit::Split)
                                          : rational_cayley_splits(spec, out.num_cayley);
  }
  return out;
}

LoopComparison compare_loops(const LoopSpec& a, const LoopSpec& b, const FieldSpec& field) {
  LoopComparison c{loop_decompose(a, field), loop_decompose(b, field)};
  c.counts_equal = c.a.num_fields == c.b.num_fields && c.a.num_cayley == c.b.num_cayley;
  c.degrees_equal = c.counts_equal && c.a.field_degrees == c.b.field_degrees;
  c.distinguished_by_splitting = c.counts_equal && splits_incompatible(c.a.cayley_splits, c.b.cayley_splits);
  c.split_caveat = field.is_rational() && c.counts_equal && !(a == b) && c.a.num_cayley > 0;
  return c;
}

MagmaAlgebra loop_algebra(const LoopSpec& spec, const FiniteField& f, std::uint64_t ceiling) {
  const Loop loop(spec);
  const std::uint32_t n = loop.enumerable_size(ceiling);
  const auto table = loop.multiplication_table(ceiling);
  return MagmaAlgebra(f, n, [&](std::uint32_t i, std::uint32_t j) { return table[std::size_t{i} * n + j]; });
}

MagmaAlgebra::Vec loop_algebra_star(const Loop& loop, const MagmaAlgebra& alg, const MagmaAlgebra::Vec& x) {
  MagmaAlgebra::Vec out = alg.zero();
  for (std::uint32_t i = 0; i < alg.dim(); ++i)
    if (x[i] != 0) out[loop.index(loop.star(loop.element(i)))] = x[i];
  return out;
}

NormReport norm_check(const LoopSpec& spec, std::uint64_t q, std::uint64_t samples, std::uint64_t seed,
                      std::uint32_t support) {
  const FiniteField f(q);
  const Loop loop(spec);
  const MagmaAlgebra alg = loop_algebra(spec, f);
  const std::uint32_t n = alg.dim();
  std::mt19937_64 rng(seed);
  auto random_vec = [&] {
    MagmaAlgebra::Vec v = alg.zero();
    if (support == 0) {
      for (auto& c : v) c = static_cast<FiniteField::Elem>(rng() % q);
    } else {
      for (std::uint32_t k = 0; k < support; ++k) v[rng() % n] = static_cast<FiniteField::Elem>(1 + rng() % (q - 1));
    }
    return v;
  };
  auto norm = [&](const MagmaAlgebra::Vec& x) { return alg.multiply(x, loop_algebra_star(loop, alg, x)); };

  NormReport rep;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto x = random_vec();
    const auto y = random_vec();
    const auto nx = norm(x);
    for (std::uint32_t l = 0; l < n; ++l) {
      const auto b = alg.basis(l);
      if (alg.multiply(nx, b) != alg.multiply(b, nx)) {
        ++rep.noncentral;
        break;
      }
    }
    if (norm(alg.multiply(x, y)) != alg.multiply(nx, norm(y))) ++rep.nonmultiplicative;
    ++rep.samples;
  }
  return rep;
}

ProjectionReport projection_check(const LoopSpec& spec, std::uint64_t q) {
  const FiniteField f(q);
  const Loop loop(spec);
  const Group& G = loop.group();
  const MagmaAlgebra alg = loop_algebra(spec, f);
  const std::uint32_t n = alg.dim(), half = n / 2;

  // Z(G) = prod <t_i>; its AbelianType lists the orders sorted, so pair each sorted
  // coordinate with a generator of the same order.
  const auto& ms = spec.ms;
  std::vector<std::size_t> perm(ms.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) { return ms[i] > ms[j]; });
  const AbelianType z = center(spec.group());
  const auto codes = primitive_idempotents(z, q);

  const auto inv2 = f.inv(f.from_int(2));
  const std::uint32_t s_index = loop.index({G.s(), false});
  ProjectionReport rep;
  for (const auto& code : codes) {
    // Embed e_Z into F_q L.
    MagmaAlgebra::Vec ez = alg.zero();
    for (std::uint32_t a = 0; a < code.idempotent.size(); ++a) {
      if (code.idempotent[a] == 0) continue;
      const AbelianElement coords = element_at(z, a);
      GroupElement g = G.identity();
      for (std::size_t j = 0; j < perm.size(); ++j) g.central[perm[j]] = coords.coords[j];
      ez[loop.index({g, false})] = code.idempotent[a];
    }
    for (int sign : {1, -1}) {
      MagmaAlgebra::Vec half_s = alg.basis(0, inv2);
      half_s[s_index] = f.add(half_s[s_index], sign > 0 ? inv2 : f.neg(inv2));
      const auto e = alg.multiply(ez, half_s);
      if (e == alg.zero()) continue;

      // Two-sided ideal generated by e: close the span under left and right
      // multiplication by loop elements.
      EchelonBasis ideal(f, n);
      std::vector<MagmaAlgebra::Vec> queue{e};
      ideal.insert(e);
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (std::uint32_t l = 0; l < n; ++l)
          for (const auto& v : {alg.multiply(alg.basis(l), queue[k]), alg.multiply(queue[k], alg.basis(l))})
            if (ideal.insert(v)) queue.push_back(v);

      EchelonBasis pg(f, half), pu(f, half), both(f, half);
      for (const auto& row : ideal.rows()) {
        const MagmaAlgebra::Vec g_part(row.begin(), row.begin() + half), u_part(row.begin() + half, row.end());
        pg.insert(g_part);
        pu.insert(u_part);
        both.insert(g_part);
        both.insert(u_part);
      }
      ++rep.ideals_checked;
      if (pg.rank() != pu.rank() || both.rank() != pg.rank()) ++rep.mismatches;
    }
  }
  return rep;
}

}  // namespace gralg
