#include "gralg/kernels.hpp"

namespace gralg::kernels::scalar {

void frobenius_map(const PowerOfTwoLayout& layout, std::uint64_t r, std::span<std::uint32_t> out) {
  const auto r32 = static_cast<std::uint32_t>(r);
  const std::size_t coords = layout.widths.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    std::uint32_t image = 0;
    for (std::size_t c = 0; c < coords; ++c) {
      const std::uint32_t mask = (std::uint32_t{1} << layout.widths[c]) - 1;
      const std::uint32_t v = (idx >> layout.offsets[c]) & mask;
      image |= ((v * r32) & mask) << layout.offsets[c];
    }
    out[i] = image;
  }
}

void gather_axpy(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src,
                 std::span<const std::uint32_t> perm, std::uint32_t c) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * src[perm[i]];
}

TripleTally loop_triple_row(std::span<const std::uint32_t> table, std::uint32_t n, std::uint32_t x,
                            std::uint32_t y) {
  TripleTally tally;
  const std::uint32_t* t = table.data();
  const std::uint32_t xy = t[std::size_t{x} * n + y];
  for (std::uint32_t z = 0; z < n; ++z) {
    const std::uint32_t xy_z = t[std::size_t{xy} * n + z];
    const std::uint32_t lhs = t[std::size_t{xy_z} * n + y];
    const std::uint32_t zy = t[std::size_t{z} * n + y];
    const std::uint32_t y_zy = t[std::size_t{y} * n + zy];
    const std::uint32_t rhs = t[std::size_t{x} * n + y_zy];
    tally.moufang_failures += lhs != rhs;
    const std::uint32_t yz = t[std::size_t{y} * n + z];
    tally.nonassociative += xy_z != t[std::size_t{x} * n + yz];
  }
  return tally;
}

}  // namespace gralg::kernels::scalar
