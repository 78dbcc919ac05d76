#pragma once

#include <string>
#include <vector>

#include "rrc/monomial_ideal.hpp"

namespace rrc {

// Deterministic SVG of the staircases of two two-variable ideals (typically
// an input and the result of an operation on it). The result region is the
// light shade, the input region the dark one, so gained monomials stand out.
std::string staircase_svg(const std::vector<std::string>& vars, const MonomialIdeal& input,
                          const MonomialIdeal& result);

}  // namespace rrc
