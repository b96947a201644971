#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gralg {

/// Coefficient field of a group algebra: the rationals or a finite field of odd order q.
///
/// Only q modulo powers of two enters the class counts; q must nevertheless be a genuine
/// odd prime power so that F_q exists.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws DomainError unless q is an odd prime power.
  static FieldSpec finite(std::uint64_t q);
  /// Parses "Q" or "Fq:<q>".
  static FieldSpec parse(std::string_view tag);

  bool is_rational() const noexcept { return q_ == 0; }
  bool is_finite() const noexcept { return q_ != 0; }
  /// Field order; 0 for Q.
  std::uint64_t order() const noexcept { return q_; }
  std::string tag() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t q_ = 0;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Decomposes q = p^k; throws DomainError if q is not a prime power.
PrimePower prime_power_decompose(std::uint64_t q);

bool is_prime(std::uint64_t n);

}  // namespace gralg
