#pragma once

// Arithmetic in F_q (q = p^k, table driven) and in extensions F_{q^D} represented as
// F_q[z]/(g) for a monic irreducible g found by a seeded search.

#include "gralg/core.hpp"

#include <cstdint>
#include <vector>

namespace gralg {

/// F_q for odd q <= 65536. An element is encoded as the integer sum c_r p^r, where
/// c_0 + c_1 theta + ... is its expansion in the basis of powers of a root theta of
/// the defining polynomial; the prime subfield is {0, ..., p-1}.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Throws DomainError unless q is an odd prime power <= 65536.
  explicit FiniteField(std::uint64_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  /// Monic defining polynomial over F_p, coefficients low to high (size k + 1); theta
  /// is primitive.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const;
  /// Throws DomainError on zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  /// Coefficient of theta^r (r < k).
  std::uint32_t digit(Elem a, unsigned r) const { return (a / pw_[r]) % p_; }
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;
  /// theta, a generator of F_q^*.
  Elem generator() const { return k_ == 1 ? exp_[1] : p_; }

 private:
  std::uint32_t q_, p_;
  unsigned k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pw_;   // p^r
  std::vector<Elem> exp_;           // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[a], a != 0
};

/// F_{q^D} = F_q[z]/(g). Elements are coefficient vectors of length D over F_q.
class ExtensionField {
 public:
  using Elem = std::vector<FiniteField::Elem>;

  /// Picks g by testing seeded random monic candidates for irreducibility.
  ExtensionField(const FiniteField& base, unsigned degree, std::uint64_t seed = 0x5eed);

  const FiniteField& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return d_; }
  const std::vector<FiniteField::Elem>& modulus() const noexcept { return g_; }
  /// |F_{q^D}| - 1.
  const Count& unit_group_order() const noexcept { return units_; }

  Elem zero() const { return Elem(d_, 0); }
  Elem one() const;
  Elem constant(FiniteField::Elem c) const;
  bool is_zero(const Elem& a) const;
  /// True when a lies in F_q (all higher coefficients vanish).
  bool is_constant(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, const Count& e) const;

  /// An element of multiplicative order exactly 2^e. Requires 2^e | q^D - 1.
  Elem root_of_unity_2power(int e, std::uint64_t seed = 0x2007) const;

 private:
  FiniteField base_;
  unsigned d_;
  std::vector<FiniteField::Elem> g_;  // monic, size d_ + 1
  Count units_;
};

}  // namespace gralg
