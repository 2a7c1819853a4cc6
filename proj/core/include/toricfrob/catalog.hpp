#pragma once

// Built-in fans, addressable by expressions such as "projective(3)",
// "product(1,2)" or "blowup(projective(3),[1,1,0])".

#include <string>
#include <vector>

#include "toricfrob/fan.hpp"

namespace toricfrob {

Fan projective_space(std::size_t d);
/// Product of projective spaces of the given dimensions.
Fan product_of_projective(const std::vector<std::size_t>& dims);
/// Rays (1,0),(0,1),(-1,n),(0,-1).
Fan hirzebruch(unsigned n);
/// Blowup of P^2 in k <= 3 torus-fixed points.
Fan del_pezzo(unsigned k);
/// P^3 star-subdivided at (0,3,2).
Fan fatal_example();
/// Seven-ray surface with vanishing nef signature.
Fan zero_nef_surface();
Fan weighted_projective(const std::vector<Integer>& weights);

/// Throws UnknownName (or ParseError for malformed expressions).
Fan catalog(const std::string& expression);

/// One line per entry: syntax and description.
std::vector<std::string> catalog_listing();

/// Smooth fans used by the cross-checks.
std::vector<std::string> smooth_catalog();
/// Every named example, smooth or not, with d <= 4.
std::vector<std::string> full_catalog();

}  // namespace toricfrob
