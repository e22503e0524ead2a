#pragma once

#include <cstddef>
#include <vector>

#include "zetacert/interval.hpp"

namespace zetacert::detail {

// Per-zero data for the B pair sums in structure-of-arrays form.
// cm, sm are midpoints of enclosures of cos(g log 2), sin(g log 2) and r
// bounds the sum of their radii.
struct BKernelZeros {
  std::vector<double> glo, ghi, wlo, whi, cm, sm, r;

  void push(const Interval& g, const Interval& w, const Interval& c, const Interval& s);
  std::size_t size() const noexcept { return glo.size(); }
};

// Encloses sum_{j<i} [t(g_i - g_j) + t(g_i + g_j)] with
// t = sqrt(num * w_i w_j / (4 + theta^2)) and num = |4 e^{i theta log 2} - 1|^2
// (or 1 without the numerator).
Interval b_row(const BKernelZeros& z, std::size_t i, bool with_numerator);

// Encloses sum_{j<i} [T(g_i, g_j) + T(g_i, -g_j)] for the c2 kernel
// T(g1, g2) = 2 w1 w2 (1 + 4 g1 g2 - theta^2) / (4 + theta^2). Needs g > 2.
Interval c2_row(const BKernelZeros& z, std::size_t i);

}  // namespace zetacert::detail
