#include "gralg/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace gralg::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(GRALG_BUILD_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("GRALG_ISA"); env != nullptr && std::strcmp(env, "scalar") == 0)
    return Isa::kScalar;
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa detected_isa() { return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar; }

bool isa_supported(Isa isa) { return isa == Isa::kScalar || cpu_has_avx2(); }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("ISA not supported: ") + isa_name(isa));
  active().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

PowerOfTwoLayout PowerOfTwoLayout::packed(std::span<const int> exps) {
  PowerOfTwoLayout layout;
  std::uint32_t offset = 0;
  for (int e : exps) {
    layout.offsets.push_back(offset);
    layout.widths.push_back(static_cast<std::uint32_t>(e));
    offset += static_cast<std::uint32_t>(e);
  }
  if (offset > 31) throw std::invalid_argument("index layout wider than 31 bits");
  layout.total_bits = offset;
  return layout;
}

void frobenius_map(const PowerOfTwoLayout& layout, std::uint64_t r, std::span<std::uint32_t> out) {
  if (out.size() != layout.size()) throw std::invalid_argument("frobenius_map: output size mismatch");
  if (active_isa() == Isa::kAvx2) return avx2::frobenius_map(layout, r, out);
  scalar::frobenius_map(layout, r, out);
}

void gather_axpy(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src,
                 std::span<const std::uint32_t> perm, std::uint32_t c) {
  if (perm.size() != acc.size()) throw std::invalid_argument("gather_axpy: permutation size mismatch");
  if (active_isa() == Isa::kAvx2) return avx2::gather_axpy(acc, src, perm, c);
  scalar::gather_axpy(acc, src, perm, c);
}

TripleTally loop_triple_row(std::span<const std::uint32_t> table, std::uint32_t n, std::uint32_t x,
                            std::uint32_t y) {
  if (table.size() != std::size_t{n} * n) throw std::invalid_argument("loop_triple_row: table is not n x n");
  if (active_isa() == Isa::kAvx2) return avx2::loop_triple_row(table, n, x, y);
  return scalar::loop_triple_row(table, n, x, y);
}

void reduce_mod(std::span<std::uint32_t> v, std::uint32_t p) {
  for (auto& x : v) x %= p;
}

}  // namespace gralg::kernels
