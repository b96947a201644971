#pragma once

#include "gralg/groups.hpp"
#include "gralg/raloops.hpp"

#include <vector>

namespace grid {

/// Every spec of every family with m_i in [lo, hi] and log2|G| <= max_log2_order.
inline std::vector<gralg::GroupSpec> specs(int lo, int hi, int max_log2_order) {
  using gralg::Family;
  std::vector<gralg::GroupSpec> out;
  for (Family f : {Family::D1, Family::D2, Family::D3, Family::D4, Family::D5, Family::D5xC}) {
    std::vector<std::vector<int>> ms{{}};
    for (std::size_t i = 0; i < gralg::family_arity(f); ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& v : ms)
        for (int m = lo; m <= hi; ++m) {
          auto w = v;
          w.push_back(m);
          next.push_back(std::move(w));
        }
      ms = std::move(next);
    }
    for (auto& v : ms) {
      auto s = gralg::GroupSpec::make(f, std::move(v));
      if (s.log2_order() <= max_log2_order) out.push_back(std::move(s));
    }
  }
  return out;
}

/// Specs of one family with all m_i in [lo, hi].
inline std::vector<gralg::GroupSpec> family(gralg::Family f, int lo, int hi) {
  std::vector<gralg::GroupSpec> out;
  for (auto& s : specs(lo, hi, 1 << 20))
    if (s.family == f) out.push_back(std::move(s));
  return out;
}

/// Every loop spec with m_i >= 1 and log2|L| <= max_log2_order.
inline std::vector<gralg::LoopSpec> loops(int max_log2_order) {
  using gralg::LoopClass;
  std::vector<gralg::LoopSpec> out;
  for (auto c : {LoopClass::L1, LoopClass::L2, LoopClass::L3, LoopClass::L4, LoopClass::L5, LoopClass::L6, LoopClass::L7})
    for (const auto& g : specs(1, max_log2_order, max_log2_order - 1))
      if (g.family == gralg::loop_family(c)) out.push_back(gralg::LoopSpec::make(c, g.ms));
  return out;
}

}  // namespace grid
