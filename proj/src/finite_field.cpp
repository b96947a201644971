#include "gralg/finite_field.hpp"

#include "gralg/field.hpp"

#include <random>

namespace gralg {

namespace {

using Poly = std::vector<FiniteField::Elem>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F, b nonzero.
Poly poly_mod(const FiniteField& f, Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const auto lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const auto c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    trim(a);
  }
  return a;
}

Poly poly_gcd(const FiniteField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t q) {
  if (q % 2 == 0 || q > 65536) throw DomainError("finite field arithmetic needs an odd prime power q <= 65536, got " + std::to_string(q));
  const PrimePower pp = prime_power_decompose(q);
  q_ = static_cast<std::uint32_t>(q);
  p_ = static_cast<std::uint32_t>(pp.prime);
  k_ = pp.exponent;
  pw_.assign(k_ + 1, 1);
  for (unsigned r = 1; r <= k_; ++r) pw_[r] = pw_[r - 1] * p_;

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  // Smallest monic f of degree k (coefficients read as a base-p counter) for which
  // theta = x has order q - 1; such an f is irreducible.
  for (std::uint32_t code = 1; code < q_; ++code) {
    std::vector<std::uint32_t> f(k_ + 1, 0);
    for (unsigned r = 0; r < k_; ++r) f[r] = (code / pw_[r]) % p_;
    f[k_] = 1;
    if (f[0] == 0) continue;
    if (k_ == 1) f[0] = p_ - (code % p_);  // x - c, theta = c
    std::vector<std::uint32_t> cur(k_, 0);
    cur[0] = 1;
    std::uint32_t order = 0;
    bool ok = true;
    std::vector<bool> seen(q_, false);
    for (;;) {
      std::uint32_t enc = 0;
      for (unsigned r = 0; r < k_; ++r) enc += cur[r] * pw_[r];
      if (seen[enc]) {
        ok = enc == 1 && order == q_ - 1;
        break;
      }
      seen[enc] = true;
      if (order < q_ - 1) exp_[order] = enc;
      ++order;
      // cur *= theta, then reduce with theta^k = -sum f_r theta^r.
      const std::uint32_t top = k_ == 1 ? cur[0] : cur[k_ - 1];
      if (k_ == 1) {
        cur[0] = static_cast<std::uint32_t>((std::uint64_t{cur[0]} * (p_ - f[0])) % p_);
      } else {
        for (unsigned r = k_ - 1; r > 0; --r) cur[r] = cur[r - 1];
        cur[0] = 0;
        for (unsigned r = 0; r < k_; ++r) cur[r] = (cur[r] + (p_ - f[r]) * top) % p_;
      }
      if (order > q_) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    modulus_ = f;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
    return;
  }
  throw DomainError("no primitive polynomial found for q = " + std::to_string(q));
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % p_;
  Elem out = 0;
  for (unsigned r = 0; r < k_; ++r) out += ((digit(a, r) + digit(b, r)) % p_) * pw_[r];
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
  if (k_ == 1) return (a + p_ - b) % p_;
  Elem out = 0;
  for (unsigned r = 0; r < k_; ++r) out += ((digit(a, r) + p_ - digit(b, r)) % p_) * pw_[r];
  return out;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t l = log_[a] + log_[b];
  if (l >= q_ - 1) l -= q_ - 1;
  return exp_[l];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1))];
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Elem>(((v % p) + p) % p);
}

FiniteField::Elem FiniteField::from_digits(const std::vector<std::uint32_t>& digits) const {
  Elem out = 0;
  for (unsigned r = 0; r < k_ && r < digits.size(); ++r) out += (digits[r] % p_) * pw_[r];
  return out;
}

ExtensionField::ExtensionField(const FiniteField& base, unsigned degree, std::uint64_t seed)
    : base_(base), d_(degree) {
  if (degree == 0) throw DomainError("extension degree must be positive");
  units_ = boost::multiprecision::pow(Count{base.q()}, degree) - 1;
  g_.assign(d_ + 1, 0);
  g_[d_] = 1;
  if (d_ == 1) return;  // F_q[z]/(z)

  std::mt19937_64 rng(seed);
  const auto primes = prime_factors(d_);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (unsigned i = 0; i < d_; ++i) g_[i] = static_cast<FiniteField::Elem>(rng() % base_.q());
    if (g_[0] == 0) continue;
    // Rabin: z^{q^D} = z mod g, and gcd(z^{q^{D/r}} - z, g) = 1 for primes r | D.
    std::vector<Elem> frob{zero()};
    frob[0][1] = 1;
    for (unsigned j = 1; j <= d_; ++j) frob.push_back(pow(frob.back(), Count{base_.q()}));
    Elem z = zero();
    z[1] = 1;
    if (frob[d_] != z) continue;
    bool irreducible = true;
    for (unsigned r : primes) {
      Poly h = sub(frob[d_ / r], z);
      if (poly_gcd(base_, h, g_).size() != 1) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) return;
  }
  throw DomainError("no irreducible polynomial of degree " + std::to_string(d_) + " found");
}

ExtensionField::Elem ExtensionField::one() const { return constant(1); }

ExtensionField::Elem ExtensionField::constant(FiniteField::Elem c) const {
  Elem e = zero();
  e[0] = c;
  return e;
}

bool ExtensionField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

bool ExtensionField::is_constant(const Elem& a) const {
  for (unsigned i = 1; i < d_; ++i)
    if (a[i] != 0) return false;
  return true;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
  Elem out(d_);
  for (unsigned i = 0; i < d_; ++i) out[i] = base_.add(a[i], b[i]);
  return out;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
  Elem out(d_);
  for (unsigned i = 0; i < d_; ++i) out[i] = base_.sub(a[i], b[i]);
  return out;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
  Poly prod(2 * d_ - 1, 0);
  for (unsigned i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j)
      if (b[j] != 0) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  for (unsigned i = 2 * d_ - 2; i >= d_; --i) {
    const auto c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < d_; ++j) prod[i - d_ + j] = base_.sub(prod[i - d_ + j], base_.mul(c, g_[j]));
  }
  prod.resize(d_);
  return prod;
}

ExtensionField::Elem ExtensionField::pow(const Elem& a, const Count& e) const {
  Elem result = one(), base = a;
  Count k = e;
  while (k > 0) {
    if (boost::multiprecision::bit_test(k, 0)) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

ExtensionField::Elem ExtensionField::root_of_unity_2power(int e, std::uint64_t seed) const {
  if (e < 0) throw DomainError("negative exponent");
  const Count n = pow2(static_cast<unsigned>(e));
  if (units_ % n != 0)
    throw DomainError("F_{q^D} has no element of order 2^" + std::to_string(e));
  if (e == 0) return one();
  std::mt19937_64 rng(seed);
  const Count cofactor = units_ / n;
  const Count half = n / 2;
  for (;;) {
    Elem b(d_);
    for (auto& c : b) c = static_cast<FiniteField::Elem>(rng() % base_.q());
    if (is_zero(b)) continue;
    Elem z = pow(b, cofactor);
    if (pow(z, half) != one()) return z;
  }
}

}  // namespace gralg
