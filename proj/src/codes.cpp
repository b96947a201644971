#include "gralg/codes.hpp"

#include "gralg/kernels.hpp"

#include <algorithm>
#include <map>

namespace gralg {

namespace {

kernels::PowerOfTwoLayout layout_checked(const AbelianType& a, std::uint64_t ceiling, const char* what) {
  if (a.log2_order() > 31 || (std::uint64_t{1} << a.log2_order()) > ceiling)
    throw CeilingExceeded(what, a.log2_order() > 63 ? UINT64_MAX : std::uint64_t{1} << a.log2_order(), ceiling);
  return kernels::PowerOfTwoLayout::packed(a.exps().exps());
}

// Sum over coordinates of c_i a_i 2^{E - e_i} mod 2^E: chi_c(a) = zeta^{pairing}.
std::uint64_t pairing(const kernels::PowerOfTwoLayout& l, int e_max, std::uint32_t c, std::uint32_t a) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < l.widths.size(); ++i) {
    const std::uint32_t w = l.widths[i];
    const std::uint64_t ci = (c >> l.offsets[i]) & ((1u << w) - 1);
    const std::uint64_t ai = (a >> l.offsets[i]) & ((1u << w) - 1);
    acc += (ci * ai) << (e_max - static_cast<int>(w));
  }
  return acc & ((std::uint64_t{1} << e_max) - 1);
}

std::string tuple_string(const AbelianType& a, std::uint32_t index) {
  const auto e = element_at(a, index);
  std::string out = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) out += (i ? "," : "") + std::to_string(e.coords[i]);
  return out + ")";
}

}  // namespace

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(const AbelianType& a, std::uint64_t q, std::uint64_t ceiling) {
  if (q % 2 == 0) throw DomainError("cyclotomic_cosets: q must be odd");
  const auto layout = layout_checked(a, ceiling, "cyclotomic_cosets");
  const std::uint64_t n = layout.size();
  std::vector<std::uint32_t> image(n);
  const int e = a.exponent_log2();
  kernels::frobenius_map(layout, e == 0 ? 1 : q % (std::uint64_t{1} << e), image);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (seen[c]) continue;
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t d = c; !seen[d]; d = image[d]) {
      seen[d] = true;
      orbit.push_back(d);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

MagmaAlgebra abelian_group_algebra(const AbelianType& a, const FiniteField& f) {
  const auto layout = layout_checked(a, 4096, "abelian_group_algebra");
  return MagmaAlgebra(f, static_cast<std::uint32_t>(layout.size()), [&](std::uint32_t i, std::uint32_t j) {
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < layout.widths.size(); ++c) {
      const std::uint32_t mask = (1u << layout.widths[c]) - 1;
      out |= ((((i >> layout.offsets[c]) & mask) + ((j >> layout.offsets[c]) & mask)) & mask) << layout.offsets[c];
    }
    return out;
  });
}

std::uint64_t ideal_dimension(const MagmaAlgebra& alg, const MagmaAlgebra::Vec& e) {
  EchelonBasis basis(alg.field(), alg.dim());
  MagmaAlgebra::Vec shifted(alg.dim());
  for (std::uint32_t g = 0; g < alg.dim(); ++g) {
    for (std::uint32_t j = 0; j < alg.dim(); ++j) shifted[alg.basis_product(g, j)] = e[j];
    basis.insert(shifted);
  }
  return basis.rank();
}

std::vector<GroupCode> primitive_idempotents(const AbelianType& a, std::uint64_t q, std::uint64_t ceiling) {
  const auto layout = layout_checked(a, ceiling, "primitive_idempotents");
  const FiniteField f(q);
  const std::uint32_t n = static_cast<std::uint32_t>(layout.size());
  const int e_max = a.exponent_log2();
  const unsigned degree = e_max == 0 ? 1 : static_cast<unsigned>(order_mod_power_of_two(q, e_max));
  const ExtensionField ext(f, degree);
  // zeta^j for j in [0, 2^E).
  const ExtensionField::Elem zeta = ext.root_of_unity_2power(e_max);
  const std::uint64_t period = std::uint64_t{1} << e_max;
  std::vector<ExtensionField::Elem> zpow{ext.one()};
  for (std::uint64_t j = 1; j < period; ++j) zpow.push_back(ext.mul(zpow.back(), zeta));

  const auto n_inv = f.inv(f.from_int(static_cast<std::int64_t>(n % f.p())));
  const MagmaAlgebra alg = abelian_group_algebra(a, f);
  std::vector<GroupCode> out;
  for (auto& coset : cyclotomic_cosets(a, q, ceiling)) {
    GroupCode code{a, q, coset, MagmaAlgebra::Vec(n, 0), 0};
    for (std::uint32_t g = 0; g < n; ++g) {
      ExtensionField::Elem s = ext.zero();
      for (std::uint32_t c : coset) s = ext.add(s, zpow[(period - pairing(layout, e_max, c, g)) & (period - 1)]);
      if (!ext.is_constant(s)) throw std::logic_error("character sum over a cyclotomic coset left F_q");
      code.idempotent[g] = f.mul(n_inv, s[0]);
    }
    code.dimension = ideal_dimension(alg, code.idempotent);
    out.push_back(std::move(code));
  }
  return out;
}

IdempotentReport verify_idempotents(const AbelianType& a, std::uint64_t q, const std::vector<GroupCode>& codes) {
  const FiniteField f(q);
  const MagmaAlgebra alg = abelian_group_algebra(a, f);
  IdempotentReport rep;
  MagmaAlgebra::Vec prefix = alg.zero();
  const MagmaAlgebra::Vec zero = alg.zero();
  for (const auto& c : codes) {
    if (alg.multiply(c.idempotent, c.idempotent) != c.idempotent) rep.idempotent = false;
    if (alg.multiply(prefix, c.idempotent) != zero) rep.orthogonal = false;
    if (c.dimension != c.coset.size()) rep.dimensions_match_cosets = false;
    prefix = alg.add(prefix, c.idempotent);
  }
  if (prefix != alg.basis(0)) rep.complete = false;
  return rep;
}

std::string idempotent_table_tsv(const std::vector<GroupCode>& codes) {
  std::string out = "code\tdimension\telement\tcoefficient\n";
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto& c = codes[i];
    for (std::uint32_t g = 0; g < c.idempotent.size(); ++g) {
      if (c.idempotent[g] == 0) continue;
      out += std::to_string(i) + '\t' + std::to_string(c.dimension) + '\t' + tuple_string(c.ambient, g) + '\t' +
             std::to_string(c.idempotent[g]) + '\n';
    }
  }
  return out;
}

}  // namespace gralg
