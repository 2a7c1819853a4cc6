#pragma once

#include <string>

#include "toricfrob/fan.hpp"

namespace toricfrob {

/// 800x800 SVG of N^1 (rho = 2): lattice grid, Eff and Nef rays, the
/// zonotope sum [0,1] D_i with half-open edges dashed, the Frobenius
/// support and the boundary divisor classes. Throws RequiresRankTwo.
std::string plot_ns(const Fan& fan);

}  // namespace toricfrob
