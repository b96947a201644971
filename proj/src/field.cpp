#include "gralg/field.hpp"

#include "gralg/core.hpp"

#include <charconv>

namespace gralg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimePower prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw DomainError("not a prime power: " + std::to_string(q));
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw DomainError("not a prime power: " + std::to_string(q));
  return {p, k};
}

FieldSpec FieldSpec::finite(std::uint64_t q) {
  if (q % 2 == 0) throw DomainError("field order must be odd (characteristic 2 divides |G|): " + std::to_string(q));
  prime_power_decompose(q);
  FieldSpec f;
  f.q_ = q;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view tag) {
  if (tag == "Q") return rationals();
  constexpr std::string_view prefix = "Fq:";
  if (tag.substr(0, prefix.size()) != prefix) throw DomainError("bad field tag '" + std::string(tag) + "' (expected Q or Fq:<q>)");
  auto digits = tag.substr(prefix.size());
  std::uint64_t q = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw DomainError("bad field order in tag '" + std::string(tag) + "'");
  return finite(q);
}

std::string FieldSpec::tag() const { return is_rational() ? std::string("Q") : "Fq:" + std::to_string(q_); }

}  // namespace gralg
