#pragma once

// 2-adic counting arithmetic: multiplicative orders modulo 2^r and the closed-form
// counts of cyclic subgroups of products of cyclic 2-groups.

#include "gralg/core.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gralg {

/// Exponents e_1 >= e_2 >= ... >= e_k >= 1 describing C_{2^{e_1}} x ... x C_{2^{e_k}}.
/// Construction sorts descending and strips zero exponents; the trivial group is the
/// empty list.
class TwoAdicExponents {
 public:
  TwoAdicExponents() = default;
  TwoAdicExponents(std::initializer_list<int> exps) : TwoAdicExponents(std::vector<int>(exps)) {}
  /// Throws DomainError on a negative entry.
  explicit TwoAdicExponents(std::vector<int> exps);

  const std::vector<int>& exps() const noexcept { return exps_; }
  std::size_t rank() const noexcept { return exps_.size(); }
  bool trivial() const noexcept { return exps_.empty(); }
  int max_exponent() const noexcept { return exps_.empty() ? 0 : exps_.front(); }
  int log2_order() const noexcept;
  /// Exponent list with every entry replaced by min(e, cap).
  TwoAdicExponents capped(int cap) const;

  friend bool operator==(const TwoAdicExponents&, const TwoAdicExponents&) = default;
  friend auto operator<=>(const TwoAdicExponents&, const TwoAdicExponents&) = default;

 private:
  std::vector<int> exps_;
};

/// Multiplicative order of q modulo 2^r (q odd, 1 <= r <= 64).
std::uint64_t order_mod_power_of_two(std::uint64_t q, int r);

/// Number of cyclic subgroups (trivial one included). Closed forms up to four
/// factors; longer lists are counted by element enumeration.
Count cyclic_subgroup_count(const TwoAdicExponents& t);

/// Number of cyclic subgroups of order exactly 2^k.
Count cyclic_subgroup_count_by_order(const TwoAdicExponents& t, int k);

/// Number of cyclic subgroups generated by an element of order at most 4.
Count small_torsion_subgroup_count(const TwoAdicExponents& t);

/// Cyclic subgroups of C_{2^a} x C_{2^b}, a >= b >= 1.
Count two_factor_count(int a, int b);
/// Cyclic subgroups of C_{2^a} x C_{2^b} x C_{2^c}, a >= b >= c >= 1.
Count f3(int a, int b, int c);
/// Cyclic subgroups of C_{2^a} x C_{2^b} x C_{2^c} x C_{2^d}, a >= b >= c >= d >= 1.
Count g4(int a, int b, int c, int d);

}  // namespace gralg
