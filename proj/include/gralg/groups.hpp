#pragma once

// The nonabelian 2-group families D1..D5 and D5 x C: each group G has centre
// Z = <t_1> x ... x <t_k>, G/Z = C2 x C2 generated by the images of x and y, and a
// single nontrivial commutator s = t_1^{2^{m_1-1}} with yx = sxy.

#include "gralg/abelian.hpp"
#include "gralg/core.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gralg {

enum class Family { D1, D2, D3, D4, D5, D5xC };

std::string_view family_name(Family f);
/// Accepts "D1".."D5" and "D5xC" (case-insensitive "x").
Family parse_family(std::string_view name);
/// Number of parameters m_i (= number of central generators).
std::size_t family_arity(Family f);

struct GroupSpec {
  Family family;
  std::vector<int> ms;

  /// Throws DomainError on wrong arity or m_i < 1.
  static GroupSpec make(Family f, std::vector<int> ms);
  /// e.g. "D3(1,2)".
  std::string name() const;
  /// log2 |G| = 2 + sum m_i.
  int log2_order() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// t^a x^dx y^dy with a reduced modulo the orders of the t_i.
struct GroupElement {
  std::vector<std::uint64_t> central;
  std::uint8_t dx = 0;
  std::uint8_t dy = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Conjugacy class: {rep} when rep is central, {rep, s*rep} otherwise.
struct ConjClass {
  GroupElement representative;
  std::uint32_t size;
};

/// Which non-central coset of Z a subquotient or count refers to.
enum class Coset { X, Y, XY };

class Group {
 public:
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  Count order() const { return pow2(static_cast<unsigned>(spec_.log2_order())); }
  std::size_t num_central() const noexcept { return spec_.ms.size(); }

  GroupElement identity() const;
  GroupElement t(std::size_t i) const;
  GroupElement x() const;
  GroupElement y() const;
  /// The commutator s.
  GroupElement s() const;

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  /// g^r for any integer r.
  GroupElement power(const GroupElement& g, std::int64_t r) const;
  /// x^{-1} y^{-1} x y.
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const;
  bool is_central(const GroupElement& g) const noexcept { return g.dx == 0 && g.dy == 0; }
  /// Throws DomainError if g is not in normal form for this group.
  void validate(const GroupElement& g) const;

  /// Central exponent vectors of x^2 and y^2.
  const std::vector<std::uint64_t>& x_square() const noexcept { return xsq_; }
  const std::vector<std::uint64_t>& y_square() const noexcept { return ysq_; }

  /// Dense index in [0, |G|): central index in the low bits, then dx, then dy.
  std::uint32_t index(const GroupElement& g) const;
  GroupElement element(std::uint32_t index) const;
  /// Throws CeilingExceeded if |G| > ceiling.
  std::uint32_t enumerable_size(std::uint64_t ceiling) const;

  std::string to_string(const GroupElement& g) const;

 private:
  std::vector<std::uint64_t> add_central(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const;

  GroupSpec spec_;
  std::vector<std::uint64_t> xsq_, ysq_, s_;
  std::vector<std::uint32_t> offsets_;
  std::uint32_t central_bits_;
};

GroupElement commutator_element(const GroupSpec& spec);
/// Z(G) = product of the <t_i>.
AbelianType center(const GroupSpec& spec);
/// Z(G)/<s>.
AbelianType center_mod_commutator(const GroupSpec& spec);
/// G/G' by Smith reduction of the abelianized presentation.
AbelianType abelianization(const GroupSpec& spec);
/// <Z(G), w>/<s> by Smith reduction.
AbelianType coset_subquotient(const GroupSpec& spec, Coset w);

/// Presentations behind the three functions above, exposed for inspection.
AbelianPresentation abelianization_presentation(const GroupSpec& spec);
AbelianPresentation coset_presentation(const GroupSpec& spec, Coset w);

std::vector<ConjClass> conjugacy_classes(const GroupSpec& spec, std::uint64_t ceiling = kDefaultCeiling);

}  // namespace gralg
