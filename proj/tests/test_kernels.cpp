#include "gralg/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace gralg::kernels;

namespace {

bool have_avx2() { return isa_supported(Isa::kAvx2); }

}  // namespace

TEST_CASE("packed layout") {
  const int exps[] = {3, 1, 2};
  const auto l = PowerOfTwoLayout::packed(exps);
  CHECK(l.offsets == std::vector<std::uint32_t>{0, 3, 4});
  CHECK(l.total_bits == 6);
  CHECK(l.size() == 64);
}

TEST_CASE("scalar frobenius map on C8") {
  const int exps[] = {3};
  const auto l = PowerOfTwoLayout::packed(exps);
  std::vector<std::uint32_t> out(8);
  scalar::frobenius_map(l, 3, out);
  CHECK(out == std::vector<std::uint32_t>{0, 3, 6, 1, 4, 7, 2, 5});
}

TEST_CASE("frobenius map: AVX2 matches scalar") {
  if (!have_avx2()) return;
  std::mt19937_64 rng(7);
  const std::vector<std::vector<int>> shapes = {{1}, {3}, {4, 2}, {5, 3, 1}, {3, 3, 3, 2}, {2, 2, 2, 2, 2, 1}, {10, 2}};
  for (const auto& s : shapes) {
    const auto l = PowerOfTwoLayout::packed(s);
    std::vector<std::uint32_t> a(l.size()), b(l.size());
    for (int trial = 0; trial < 8; ++trial) {
      const std::uint64_t r = rng() | 1;
      scalar::frobenius_map(l, r, a);
      avx2::frobenius_map(l, r, b);
      CHECK(a == b);
    }
  }
}

TEST_CASE("gather axpy: AVX2 matches scalar") {
  if (!have_avx2()) return;
  std::mt19937 rng(11);
  for (std::size_t n : {1u, 7u, 8u, 9u, 64u, 1000u}) {
    std::vector<std::uint32_t> src(n), perm(n), a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      src[i] = rng() % 1000;
      perm[i] = rng() % n;
      a[i] = b[i] = rng() % 1000;
    }
    const std::uint32_t c = rng() % 50;
    scalar::gather_axpy(a, src, perm, c);
    avx2::gather_axpy(b, src, perm, c);
    CHECK(a == b);
  }
}

TEST_CASE("loop triple row: AVX2 matches scalar on random tables") {
  if (!have_avx2()) return;
  std::mt19937 rng(5);
  for (std::uint32_t n : {3u, 8u, 13u, 32u}) {
    std::vector<std::uint32_t> table(n * n);
    for (auto& v : table) v = rng() % n;
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) CHECK(scalar::loop_triple_row(table, n, x, y) == avx2::loop_triple_row(table, n, x, y));
  }
}

TEST_CASE("loop triple row on a group table finds no failures") {
  const std::uint32_t n = 12;
  std::vector<std::uint32_t> table(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) CHECK(loop_triple_row(table, n, x, y) == TripleTally{});
}

TEST_CASE("isa selection") {
  CHECK(isa_supported(Isa::kScalar));
  const Isa before = active_isa();
  set_active_isa(Isa::kScalar);
  CHECK(active_isa() == Isa::kScalar);
  set_active_isa(before);
  std::vector<std::uint32_t> v{10, 11, 12};
  reduce_mod(v, 3);
  CHECK(v == std::vector<std::uint32_t>{1, 2, 0});
}
