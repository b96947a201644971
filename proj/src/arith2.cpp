#include "gralg/arith2.hpp"

#include "gralg/abelian.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace gralg {

TwoAdicExponents::TwoAdicExponents(std::vector<int> exps) {
  for (int e : exps)
    if (e < 0) throw DomainError("negative 2-adic exponent " + std::to_string(e));
  std::erase(exps, 0);
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps_ = std::move(exps);
}

int TwoAdicExponents::log2_order() const noexcept {
  int s = 0;
  for (int e : exps_) s += e;
  return s;
}

TwoAdicExponents TwoAdicExponents::capped(int cap) const {
  std::vector<int> out = exps_;
  for (int& e : out) e = std::min(e, cap);
  return TwoAdicExponents(std::move(out));
}

std::uint64_t order_mod_power_of_two(std::uint64_t q, int r) {
  if (q % 2 == 0) throw DomainError("order_mod_power_of_two: q must be odd, got " + std::to_string(q));
  if (r < 1 || r > 64) throw DomainError("order_mod_power_of_two: r must lie in [1, 64], got " + std::to_string(r));
  using u128 = unsigned __int128;
  const u128 modulus = u128{1} << r;
  const u128 mask = modulus - 1;
  // U(2^r) has order 2^{r-1}, so the order of q is the least 2^j with q^{2^j} = 1.
  u128 x = q & mask;
  std::uint64_t order = 1;
  while (x != 1) {
    x = (x * x) & mask;
    order <<= 1;
  }
  return order;
}

namespace {

void require_sorted(std::initializer_list<int> args, const char* name) {
  const int* prev = nullptr;
  for (const int& v : args) {
    if (v < 1) throw DomainError(std::string(name) + ": arguments must be >= 1");
    if (prev != nullptr && *prev < v) throw DomainError(std::string(name) + ": arguments must be sorted descending");
    prev = &v;
  }
}

unsigned u(int v) { return static_cast<unsigned>(v); }

}  // namespace

Count two_factor_count(int a, int b) {
  require_sorted({a, b}, "two_factor_count");
  return pow2(u(b)) * (3 + a - b) - 2;
}

Count f3(int a, int b, int c) {
  require_sorted({a, b, c}, "f3");
  Count total = 7 * (pow2(2 * u(c)) - 1) / 3;
  total += 3 * pow2(u(c)) * (pow2(u(b)) - pow2(u(c)));
  total += (a - b) * pow2(u(b + c));
  return total + 1;
}

Count g4(int a, int b, int c, int d) {
  require_sorted({a, b, c, d}, "g4");
  Count total = 15 * (pow2(3 * u(d)) - 1) / 7;
  total += 7 * pow2(u(d)) * (pow2(2 * u(c)) - pow2(2 * u(d))) / 3;
  total += 3 * pow2(u(c + d)) * (pow2(u(b)) - pow2(u(c)));
  total += (a - b) * pow2(u(b + c + d));
  return total + 1;
}

Count cyclic_subgroup_count(const TwoAdicExponents& t) {
  const auto& e = t.exps();
  switch (e.size()) {
    case 0: return 1;
    case 1: return e[0] + 1;
    case 2: return two_factor_count(e[0], e[1]);
    case 3: return f3(e[0], e[1], e[2]);
    case 4: return g4(e[0], e[1], e[2], e[3]);
    default: return cyclic_subgroup_count_brute(AbelianType(t));
  }
}

Count cyclic_subgroup_count_by_order(const TwoAdicExponents& t, int k) {
  if (k < 0) throw DomainError("cyclic_subgroup_count_by_order: negative k");
  if (k == 0) return 1;
  const auto& e = t.exps();
  if (e.empty() || k > e[0]) return 0;
  const unsigned uk = u(k);
  switch (e.size()) {
    case 1: return 1;
    case 2: {
      const unsigned b = u(e[1]);
      if (uk <= b) return 3 * pow2(uk - 1);
      return pow2(b);
    }
    case 3: {
      const unsigned b = u(e[1]), c = u(e[2]);
      if (uk <= c) return 7 * pow2(2 * (uk - 1));
      if (uk <= b) return 3 * pow2(c + uk - 1);
      return pow2(b + c);
    }
    case 4: {
      const unsigned b = u(e[1]), c = u(e[2]), d = u(e[3]);
      if (uk <= d) return 15 * pow2(3 * (uk - 1));
      if (uk <= c) return 7 * pow2(d) * pow2(2 * (uk - 1));
      if (uk <= b) return 3 * pow2(c + d + uk - 1);
      return pow2(b + c + d);
    }
    default: return cyclic_subgroup_count_by_order_brute(AbelianType(t), k);
  }
}

Count small_torsion_subgroup_count(const TwoAdicExponents& t) { return cyclic_subgroup_count(t.capped(2)); }

}  // namespace gralg
