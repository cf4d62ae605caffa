#pragma once

#include <cstddef>
#include <vector>

#include "tauhh/algebra.hpp"

namespace tauhh {

/// dim Tor_m(k_y, S_x) for a monomial algebra, counted as paths x -> y of
/// length <= m·(longest relation) lying in
///   I^n ∩ F I^{n-1} F  but not in  F I^n + I^n F      (m = 2n),
///   F I^n ∩ I^n F      but not in  I^{n+1} + F I^n F  (m = 2n+1).
/// Throws UnsupportedError on a presentation with a non-monomial relation.
std::size_t bongartz_tor(const FDAlgebra& a, std::size_t m, std::size_t y, std::size_t x);

/// table[m][x][y] = bongartz_tor(a, m, y, x) for 0 <= m <= bound.
std::vector<std::vector<std::vector<std::size_t>>> bongartz_table(const FDAlgebra& a,
                                                                  std::size_t bound);

}  // namespace tauhh
