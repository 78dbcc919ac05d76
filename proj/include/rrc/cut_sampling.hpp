#pragma once

#include <optional>
#include <utility>

#include "rrc/cut_ideal.hpp"
#include "rrc/rng.hpp"

namespace rrc {

// Membership sampling machinery. The symbolic product / colon / canonical
// forms are exercised against the raw denotational predicate; the samplers
// aim at the cut boundaries, where the kind and prefix-length cases bite.

// Random valid group element with small rational coordinates.
LexVector random_element(const ValueGroup& g, Rng& rng);

// Random element of S(c) (boundary-biased).
LexVector sample_element_in(const CutIdeal& c, Rng& rng);

// Random element outside S(c), near the boundary when possible.
LexVector sample_element_out(const CutIdeal& c, Rng& rng);

// For g in S(cut_multiply(a, b)): a witness split g = x + y with x in S(a),
// y in S(b). Empty only if the symbolic product were unsound at g.
std::optional<std::pair<LexVector, LexVector>> decompose_product(const CutIdeal& a,
                                                                 const CutIdeal& b,
                                                                 const LexVector& g);

// For x outside S(cut_colon(a, b)): a witness y in S(b) with x + y outside
// S(a). Empty only if the symbolic colon were too small at x.
std::optional<LexVector> colon_violation_witness(const CutIdeal& a, const CutIdeal& b,
                                                 const LexVector& x);

// Random possibly non-canonical cut data over the given rho grid.
struct RawCutData {
    CutKind kind;
    int m;
    std::vector<Rational> rho;
};
RawCutData random_raw_cut(const ValueGroup& g, Rng& rng, const std::vector<Rational>& grid);

// Canonical random cut; integral_only restricts to cuts inside V.
CutIdeal random_cut(const ValueGroup& g, Rng& rng, const std::vector<Rational>& grid,
                    bool integral_only);

}  // namespace rrc
