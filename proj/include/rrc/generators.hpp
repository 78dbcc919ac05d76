#pragma once

#include <cstdint>
#include <vector>

#include "rrc/cut_ideal.hpp"
#include "rrc/monomial_ideal.hpp"
#include "rrc/rng.hpp"

namespace rrc {

struct MonomialGenConfig {
    int max_vars = 2;   // ambient dimension of generated ideals
    int max_gens = 5;
    long long max_exp = 8;
    Rational m_primary_bias = Rational(1, 4);  // chance to force pure powers
};

struct ValuationGenConfig {
    std::vector<ValueGroup> groups;
    std::vector<Rational> rho_grid;
    bool fractional_allowed = true;
};

struct GeneratorConfig {
    std::uint64_t seed = 42;
    int cases = 200;
    MonomialGenConfig monomial;
    ValuationGenConfig valuation;

    // The five groups and the rho grid the verification suite walks.
    static GeneratorConfig defaults();

    void validate() const;
};

// Identical (cfg, position) always yields the identical value; streams for
// distinct purposes are separated by the tag.
MonomialIdeal gen_monomial_ideal(const GeneratorConfig& cfg, std::uint64_t position);
MonomialIdeal gen_principal_ideal(const GeneratorConfig& cfg, std::uint64_t position);
MonomialIdeal gen_m_primary_ideal(const GeneratorConfig& cfg, std::uint64_t position);

CutIdeal gen_cut_ideal(const GeneratorConfig& cfg, const ValueGroup& g,
                       std::uint64_t position, bool integral_only);
LexVector gen_group_element(const GeneratorConfig& cfg, const ValueGroup& g,
                            std::uint64_t position);

// Every canonical cut obtained from the configured rho grid over all kinds
// and prefix lengths, deduplicated; with integral_proper_only, restricted to
// proper ideals of V.
std::vector<CutIdeal> grid_cuts(const GeneratorConfig& cfg, const ValueGroup& g,
                                bool integral_proper_only);

bool chance_rational(Rng& rng, const Rational& p);

}  // namespace rrc
