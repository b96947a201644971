#include "gralg/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gralg {

namespace {

std::uint64_t mask(int m) { return (std::uint64_t{1} << m) - 1; }

std::vector<std::uint64_t> unit(std::size_t k, std::size_t i) {
  std::vector<std::uint64_t> v(k, 0);
  if (i < k) v[i] = 1;
  return v;
}

std::uint64_t reduce_signed(std::int64_t r, int m) {
  const auto mod = static_cast<std::int64_t>(std::uint64_t{1} << m);
  std::int64_t v = r % mod;
  if (v < 0) v += mod;
  return static_cast<std::uint64_t>(v);
}

std::int64_t floor_half(std::int64_t r) { return r >= 0 ? r / 2 : -((-r + 1) / 2); }

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::D1: return "D1";
    case Family::D2: return "D2";
    case Family::D3: return "D3";
    case Family::D4: return "D4";
    case Family::D5: return "D5";
    case Family::D5xC: return "D5xC";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string n(name);
  for (char& c : n) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (n == "D1") return Family::D1;
  if (n == "D2") return Family::D2;
  if (n == "D3") return Family::D3;
  if (n == "D4") return Family::D4;
  if (n == "D5") return Family::D5;
  if (n == "D5XC") return Family::D5xC;
  throw DomainError("unknown group family '" + std::string(name) + "'");
}

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::D1:
    case Family::D2: return 1;
    case Family::D3:
    case Family::D4: return 2;
    case Family::D5: return 3;
    case Family::D5xC: return 4;
  }
  return 0;
}

GroupSpec GroupSpec::make(Family f, std::vector<int> ms) {
  if (ms.size() != family_arity(f))
    throw DomainError(std::string(family_name(f)) + " takes " + std::to_string(family_arity(f)) + " parameters, got " +
                      std::to_string(ms.size()));
  for (int m : ms)
    if (m < 1 || m > 60) throw DomainError("group parameter out of range [1, 60]: " + std::to_string(m));
  return GroupSpec{f, std::move(ms)};
}

std::string GroupSpec::name() const {
  std::string out(family_name(family));
  out += '(';
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? "," : "") + std::to_string(ms[i]);
  return out + ')';
}

int GroupSpec::log2_order() const { return 2 + std::accumulate(ms.begin(), ms.end(), 0); }

Group::Group(GroupSpec spec) : spec_(GroupSpec::make(spec.family, std::move(spec.ms))) {
  const std::size_t k = spec_.ms.size();
  switch (spec_.family) {
    case Family::D1: xsq_ = unit(k, k); ysq_ = unit(k, k); break;
    case Family::D2: xsq_ = unit(k, 0); ysq_ = unit(k, 0); break;
    case Family::D3: xsq_ = unit(k, k); ysq_ = unit(k, 1); break;
    case Family::D4: xsq_ = unit(k, 0); ysq_ = unit(k, 1); break;
    case Family::D5:
    case Family::D5xC: xsq_ = unit(k, 1); ysq_ = unit(k, 2); break;
  }
  s_.assign(k, 0);
  s_[0] = std::uint64_t{1} << (spec_.ms[0] - 1);
  central_bits_ = 0;
  for (int m : spec_.ms) {
    offsets_.push_back(central_bits_);
    central_bits_ += static_cast<std::uint32_t>(m);
  }
}

std::vector<std::uint64_t> Group::add_central(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) const {
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) & mask(spec_.ms[i]);
  return out;
}

GroupElement Group::identity() const { return {std::vector<std::uint64_t>(num_central(), 0), 0, 0}; }

GroupElement Group::t(std::size_t i) const {
  if (i >= num_central()) throw DomainError("central generator index out of range");
  return {unit(num_central(), i), 0, 0};
}

GroupElement Group::x() const { return {std::vector<std::uint64_t>(num_central(), 0), 1, 0}; }
GroupElement Group::y() const { return {std::vector<std::uint64_t>(num_central(), 0), 0, 1}; }
GroupElement Group::s() const { return {s_, 0, 0}; }

void Group::validate(const GroupElement& g) const {
  if (g.central.size() != num_central()) throw DomainError("element has wrong number of central coordinates");
  for (std::size_t i = 0; i < num_central(); ++i)
    if (g.central[i] > mask(spec_.ms[i])) throw DomainError("central coordinate out of range");
  if (g.dx > 1 || g.dy > 1) throw DomainError("x/y exponents must be 0 or 1");
}

GroupElement Group::multiply(const GroupElement& g, const GroupElement& h) const {
  // t^a x^d1 y^e1 . t^b x^d2 y^e2: move y^e1 past x^d2 (picks up s), then fold x^2, y^2.
  GroupElement out{add_central(g.central, h.central), static_cast<std::uint8_t>(g.dx ^ h.dx),
                   static_cast<std::uint8_t>(g.dy ^ h.dy)};
  if (g.dy & h.dx) out.central = add_central(out.central, s_);
  if (g.dx & h.dx) out.central = add_central(out.central, xsq_);
  if (g.dy & h.dy) out.central = add_central(out.central, ysq_);
  return out;
}

GroupElement Group::inverse(const GroupElement& g) const {
  GroupElement out{std::vector<std::uint64_t>(num_central()), g.dx, g.dy};
  for (std::size_t i = 0; i < num_central(); ++i) {
    const int m = spec_.ms[i];
    std::uint64_t v = -g.central[i];
    if (g.dx) v -= xsq_[i];
    if (g.dy) v -= ysq_[i];
    if (g.dx & g.dy) v += s_[i];
    out.central[i] = v & mask(m);
  }
  return out;
}

GroupElement Group::power(const GroupElement& g, std::int64_t r) const {
  // (c w)^r = c^r (w^2)^{floor(r/2)} w^{r mod 2}, with (xy)^2 = s x^2 y^2.
  std::vector<std::uint64_t> w2(num_central(), 0);
  if (g.dx) w2 = add_central(w2, xsq_);
  if (g.dy) w2 = add_central(w2, ysq_);
  if (g.dx & g.dy) w2 = add_central(w2, s_);
  const std::int64_t half = floor_half(r);
  const bool odd = (r - 2 * half) == 1;
  GroupElement out{std::vector<std::uint64_t>(num_central()), static_cast<std::uint8_t>(odd ? g.dx : 0),
                   static_cast<std::uint8_t>(odd ? g.dy : 0)};
  for (std::size_t i = 0; i < num_central(); ++i) {
    const int m = spec_.ms[i];
    // Wrapping 64-bit arithmetic is exact modulo 2^m.
    out.central[i] = (g.central[i] * reduce_signed(r, m) + w2[i] * reduce_signed(half, m)) & mask(m);
  }
  return out;
}

GroupElement Group::commutator(const GroupElement& g, const GroupElement& h) const {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

std::uint32_t Group::enumerable_size(std::uint64_t ceiling) const {
  const int bits = spec_.log2_order();
  if (bits > 31) throw CeilingExceeded(spec_.name(), UINT64_MAX, ceiling);
  const std::uint64_t n = std::uint64_t{1} << bits;
  if (n > ceiling) throw CeilingExceeded(spec_.name(), n, ceiling);
  return static_cast<std::uint32_t>(n);
}

std::uint32_t Group::index(const GroupElement& g) const {
  if (spec_.log2_order() > 32) throw DomainError("group too large to index");
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < num_central(); ++i) idx |= static_cast<std::uint32_t>(g.central[i]) << offsets_[i];
  idx |= static_cast<std::uint32_t>(g.dx) << central_bits_;
  idx |= static_cast<std::uint32_t>(g.dy) << (central_bits_ + 1);
  return idx;
}

GroupElement Group::element(std::uint32_t index) const {
  GroupElement g{std::vector<std::uint64_t>(num_central()), 0, 0};
  for (std::size_t i = 0; i < num_central(); ++i) g.central[i] = (index >> offsets_[i]) & mask(spec_.ms[i]);
  g.dx = (index >> central_bits_) & 1;
  g.dy = (index >> (central_bits_ + 1)) & 1;
  return g;
}

std::string Group::to_string(const GroupElement& g) const {
  std::string out;
  for (std::size_t i = 0; i < num_central(); ++i) {
    if (g.central[i] == 0) continue;
    out += "t" + std::to_string(i + 1);
    if (g.central[i] != 1) out += "^" + std::to_string(g.central[i]);
  }
  if (g.dx) out += "x";
  if (g.dy) out += "y";
  return out.empty() ? "1" : out;
}

GroupElement commutator_element(const GroupSpec& spec) { return Group(spec).s(); }

AbelianType center(const GroupSpec& spec) { return AbelianType(TwoAdicExponents(spec.ms)); }

namespace {

// Generators t_1..t_k (plus optional extras); rows kill t_i^{2^{m_i}} and s.
AbelianPresentation central_presentation(const GroupSpec& spec, std::size_t extra) {
  const std::size_t k = spec.ms.size();
  AbelianPresentation p;
  p.num_generators = k + extra;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> row(k + extra, 0);
    row[i] = std::int64_t{1} << spec.ms[i];
    p.relations.push_back(std::move(row));
  }
  std::vector<std::int64_t> srow(k + extra, 0);
  srow[0] = std::int64_t{1} << (spec.ms[0] - 1);
  p.relations.push_back(std::move(srow));
  return p;
}

// Row expressing gen^2 = central value.
std::vector<std::int64_t> square_relation(std::size_t width, std::size_t gen, const std::vector<std::uint64_t>& value) {
  std::vector<std::int64_t> row(width, 0);
  for (std::size_t i = 0; i < value.size(); ++i) row[i] = -static_cast<std::int64_t>(value[i]);
  row[gen] += 2;
  return row;
}

}  // namespace

AbelianType center_mod_commutator(const GroupSpec& spec) { return smith_reduce(central_presentation(spec, 0)); }

AbelianPresentation abelianization_presentation(const GroupSpec& spec) {
  const Group g(spec);
  const std::size_t k = spec.ms.size();
  AbelianPresentation p = central_presentation(spec, 2);
  p.relations.push_back(square_relation(k + 2, k, g.x_square()));
  p.relations.push_back(square_relation(k + 2, k + 1, g.y_square()));
  return p;
}

AbelianType abelianization(const GroupSpec& spec) { return smith_reduce(abelianization_presentation(spec)); }

AbelianPresentation coset_presentation(const GroupSpec& spec, Coset w) {
  const Group g(spec);
  const std::size_t k = spec.ms.size();
  AbelianPresentation p = central_presentation(spec, 1);
  const GroupElement rep{std::vector<std::uint64_t>(k, 0), static_cast<std::uint8_t>(w != Coset::Y),
                         static_cast<std::uint8_t>(w != Coset::X)};
  p.relations.push_back(square_relation(k + 1, k, g.power(rep, 2).central));
  return p;
}

AbelianType coset_subquotient(const GroupSpec& spec, Coset w) { return smith_reduce(coset_presentation(spec, w)); }

std::vector<ConjClass> conjugacy_classes(const GroupSpec& spec, std::uint64_t ceiling) {
  const Group g(spec);
  const std::uint32_t n = g.enumerable_size(ceiling);
  std::vector<bool> seen(n, false);
  std::vector<ConjClass> out;
  const GroupElement gens[] = {g.x(), g.y()};
  for (std::uint32_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    // G/Z is generated by x and y, so closing {i} under conjugation by them is enough.
    std::vector<std::uint32_t> orbit{i};
    seen[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const GroupElement e = g.element(orbit[k]);
      for (const auto& h : gens) {
        const std::uint32_t j = g.index(g.multiply(g.multiply(g.inverse(h), e), h));
        if (!seen[j]) {
          seen[j] = true;
          orbit.push_back(j);
        }
      }
    }
    out.push_back({g.element(i), static_cast<std::uint32_t>(orbit.size())});
  }
  return out;
}

}  // namespace gralg
