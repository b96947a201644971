#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference in namespace
// `scalar` and an AVX2 variant in namespace `avx2`; the unqualified entry points
// dispatch at runtime on the active ISA. All variants must produce identical output.

#include <cstdint>
#include <span>
#include <vector>

namespace gralg::kernels {

enum class Isa { kScalar, kAvx2 };

/// Best ISA supported by the running CPU (and compiled into this binary).
Isa detected_isa();
/// ISA used by the dispatching entry points. Defaults to detected_isa(), unless the
/// environment variable GRALG_ISA=scalar is set.
Isa active_isa();
/// Throws std::invalid_argument if `isa` is not supported here.
void set_active_isa(Isa isa);
bool isa_supported(Isa isa);
const char* isa_name(Isa isa);

/// Bit layout of a mixed-radix index over cyclic 2-groups: coordinate c occupies
/// widths[c] bits starting at offsets[c]; the index space is [0, 2^total_bits).
struct PowerOfTwoLayout {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> widths;
  std::uint32_t total_bits = 0;

  /// Packs coordinates with exponents `exps` from the lowest bit upwards.
  static PowerOfTwoLayout packed(std::span<const int> exps);
  std::uint64_t size() const { return std::uint64_t{1} << total_bits; }
};

/// Counts of identity failures for one (x, y) row of a loop multiplication table.
struct TripleTally {
  std::uint64_t moufang_failures = 0;  // z with ((xy)z)y != x(y(zy))
  std::uint64_t nonassociative = 0;    // z with (xy)z != x(yz)
  friend bool operator==(const TripleTally&, const TripleTally&) = default;
};

namespace scalar {
void frobenius_map(const PowerOfTwoLayout& layout, std::uint64_t r, std::span<std::uint32_t> out);
void gather_axpy(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src,
                 std::span<const std::uint32_t> perm, std::uint32_t c);
TripleTally loop_triple_row(std::span<const std::uint32_t> table, std::uint32_t n, std::uint32_t x,
                            std::uint32_t y);
}  // namespace scalar

namespace avx2 {
void frobenius_map(const PowerOfTwoLayout& layout, std::uint64_t r, std::span<std::uint32_t> out);
void gather_axpy(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src,
                 std::span<const std::uint32_t> perm, std::uint32_t c);
TripleTally loop_triple_row(std::span<const std::uint32_t> table, std::uint32_t n, std::uint32_t x,
                            std::uint32_t y);
}  // namespace avx2

/// out[i] = index of the element with index i raised to the r-th power, i.e. every
/// coordinate multiplied by r modulo its own 2^width. out.size() must equal layout.size().
void frobenius_map(const PowerOfTwoLayout& layout, std::uint64_t r, std::span<std::uint32_t> out);

/// acc[i] += c * src[perm[i]] in wrapping 32-bit arithmetic; callers keep the
/// accumulators below 2^32 and reduce modulo p themselves.
void gather_axpy(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src,
                 std::span<const std::uint32_t> perm, std::uint32_t c);

/// Scans z over [0, n) for the right Moufang identity and associativity, with
/// table[a * n + b] = a * b.
TripleTally loop_triple_row(std::span<const std::uint32_t> table, std::uint32_t n, std::uint32_t x,
                            std::uint32_t y);

/// v[i] %= p.
void reduce_mod(std::span<std::uint32_t> v, std::uint32_t p);

}  // namespace gralg::kernels
