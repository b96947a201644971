// Compiled with -mavx2; only reached through dispatch when the CPU reports AVX2.
#include "gralg/kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>
#define GRALG_HAVE_AVX2 1
#endif

namespace gralg::kernels::avx2 {

#ifdef GRALG_HAVE_AVX2

void frobenius_map(const PowerOfTwoLayout& layout, std::uint64_t r, std::span<std::uint32_t> out) {
  const std::size_t n = out.size();
  if (n < 8) {
    scalar::frobenius_map(layout, r, out);
    return;
  }
  const __m256i r32 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(r)));
  const __m256i step = _mm256_set1_epi32(8);
  __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const std::size_t coords = layout.widths.size();
  // Index spaces are powers of two, so n is a multiple of 8 here.
  for (std::size_t i = 0; i < n; i += 8) {
    __m256i image = _mm256_setzero_si256();
    for (std::size_t c = 0; c < coords; ++c) {
      const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(layout.offsets[c]));
      const __m256i mask = _mm256_set1_epi32(static_cast<int>((std::uint32_t{1} << layout.widths[c]) - 1));
      __m256i v = _mm256_and_si256(_mm256_srl_epi32(idx, shift), mask);
      v = _mm256_and_si256(_mm256_mullo_epi32(v, r32), mask);
      image = _mm256_or_si256(image, _mm256_sll_epi32(v, shift));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), image);
    idx = _mm256_add_epi32(idx, step);
  }
}

void gather_axpy(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src,
                 std::span<const std::uint32_t> perm, std::uint32_t c) {
  const std::size_t n = acc.size();
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const int* base = reinterpret_cast<const int*>(src.data());
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(perm.data() + i));
    const __m256i g = _mm256_i32gather_epi32(base, p, 4);
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc.data() + i));
    a = _mm256_add_epi32(a, _mm256_mullo_epi32(g, cv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc.data() + i), a);
  }
  for (; i < n; ++i) acc[i] += c * src[perm[i]];
}

TripleTally loop_triple_row(std::span<const std::uint32_t> table, std::uint32_t n, std::uint32_t x,
                            std::uint32_t y) {
  TripleTally tally;
  const std::uint32_t* t = table.data();
  const int* ti = reinterpret_cast<const int*>(t);
  const std::uint32_t xy = t[std::size_t{x} * n + y];
  const __m256i nv = _mm256_set1_epi32(static_cast<int>(n));
  const __m256i yv = _mm256_set1_epi32(static_cast<int>(y));
  const int* row_x = ti + std::size_t{x} * n;
  const int* row_y = ti + std::size_t{y} * n;
  __m256i zv = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  std::uint32_t z = 0;
  for (; z + 8 <= n; z += 8) {
    const __m256i xy_z = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + std::size_t{xy} * n + z));
    const __m256i lhs = _mm256_i32gather_epi32(ti, _mm256_add_epi32(_mm256_mullo_epi32(xy_z, nv), yv), 4);
    const __m256i zy = _mm256_i32gather_epi32(ti, _mm256_add_epi32(_mm256_mullo_epi32(zv, nv), yv), 4);
    const __m256i y_zy = _mm256_i32gather_epi32(row_y, zy, 4);
    const __m256i rhs = _mm256_i32gather_epi32(row_x, y_zy, 4);
    const __m256i yz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_y + z));
    const __m256i x_yz = _mm256_i32gather_epi32(row_x, yz, 4);
    const int eq_m = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(lhs, rhs)));
    const int eq_a = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(xy_z, x_yz)));
    tally.moufang_failures += 8 - static_cast<unsigned>(__builtin_popcount(static_cast<unsigned>(eq_m)));
    tally.nonassociative += 8 - static_cast<unsigned>(__builtin_popcount(static_cast<unsigned>(eq_a)));
    zv = _mm256_add_epi32(zv, step);
  }
  for (; z < n; ++z) {
    const std::uint32_t xy_z = t[std::size_t{xy} * n + z];
    const std::uint32_t lhs = t[std::size_t{xy_z} * n + y];
    const std::uint32_t zy = t[std::size_t{z} * n + y];
    const std::uint32_t rhs = t[std::size_t{x} * n + t[std::size_t{y} * n + zy]];
    tally.moufang_failures += lhs != rhs;
    tally.nonassociative += xy_z != t[std::size_t{x} * n + t[std::size_t{y} * n + z]];
  }
  return tally;
}

#else

void frobenius_map(const PowerOfTwoLayout&, std::uint64_t, std::span<std::uint32_t>) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
void gather_axpy(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::span<const std::uint32_t>,
                 std::uint32_t) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
TripleTally loop_triple_row(std::span<const std::uint32_t>, std::uint32_t, std::uint32_t, std::uint32_t) {
  throw std::logic_error("AVX2 kernels not compiled in");
}

#endif

}  // namespace gralg::kernels::avx2
