#include "rrc/generators.hpp"

#include <algorithm>

#include "rrc/cut_sampling.hpp"

namespace rrc {

GeneratorConfig GeneratorConfig::defaults() {
    GeneratorConfig cfg;
    cfg.valuation.groups = {
        ValueGroup({Component::discrete}),
        ValueGroup({Component::dense}),
        ValueGroup({Component::discrete, Component::discrete}),
        ValueGroup({Component::discrete, Component::dense}),
        ValueGroup({Component::dense, Component::discrete}),
    };
    cfg.valuation.rho_grid = {Rational(0),     Rational(1, 2), Rational(-1, 2), Rational(1),
                              Rational(-1),    Rational(3, 2), Rational(2)};
    return cfg;
}

void GeneratorConfig::validate() const {
    if (cases < 0) throw std::invalid_argument("GeneratorConfig: cases must be >= 0");
    if (monomial.max_vars < 1 || monomial.max_gens < 1 || monomial.max_exp < 1)
        throw std::invalid_argument("GeneratorConfig: monomial bounds must be positive");
    if (monomial.m_primary_bias.sign() < 0 || monomial.m_primary_bias > Rational(1))
        throw std::invalid_argument("GeneratorConfig: m_primary_bias must lie in [0,1]");
    if (valuation.groups.empty() || valuation.rho_grid.empty())
        throw std::invalid_argument("GeneratorConfig: valuation universe is empty");
}

bool chance_rational(Rng& rng, const Rational& p) {
    if (p.sign() <= 0) return false;
    if (p >= Rational(1)) return true;
    return rng.chance(p.numerator().get_ui(), p.denominator().get_ui());
}

namespace {

MonomialIdeal draw_ideal(const MonomialGenConfig& m, Rng& rng, int gens_count, bool force_primary) {
    const int n = m.max_vars;
    std::vector<ExpVec> gens;
    for (int i = 0; i < gens_count; ++i) {
        ExpVec e(static_cast<std::size_t>(n));
        long long deg = 0;
        for (auto& x : e) deg += (x = rng.int_in(0, m.max_exp));
        if (deg == 0) e[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))] =
            rng.int_in(1, m.max_exp);
        gens.push_back(std::move(e));
    }
    if (force_primary) {
        for (int v = 0; v < n; ++v) {
            ExpVec e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(v)] = rng.int_in(1, m.max_exp);
            gens.push_back(std::move(e));
        }
    }
    return MonomialIdeal::make(n, std::move(gens));
}

}  // namespace

MonomialIdeal gen_monomial_ideal(const GeneratorConfig& cfg, std::uint64_t position) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, fnv1a("monomial-ideal") + position);
    int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.monomial.max_gens))) + 1;
    bool primary = chance_rational(rng, cfg.monomial.m_primary_bias);
    return draw_ideal(cfg.monomial, rng, count, primary);
}

MonomialIdeal gen_principal_ideal(const GeneratorConfig& cfg, std::uint64_t position) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, fnv1a("principal-ideal") + position);
    return draw_ideal(cfg.monomial, rng, 1, false);
}

MonomialIdeal gen_m_primary_ideal(const GeneratorConfig& cfg, std::uint64_t position) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, fnv1a("m-primary-ideal") + position);
    int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.monomial.max_gens))) + 1;
    return draw_ideal(cfg.monomial, rng, count, true);
}

CutIdeal gen_cut_ideal(const GeneratorConfig& cfg, const ValueGroup& g,
                       std::uint64_t position, bool integral_only) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, fnv1a("cut-ideal") + position);
    bool integral = integral_only || !cfg.valuation.fractional_allowed;
    return random_cut(g, rng, cfg.valuation.rho_grid, integral);
}

LexVector gen_group_element(const GeneratorConfig& cfg, const ValueGroup& g,
                            std::uint64_t position) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, fnv1a("group-element") + position);
    return random_element(g, rng);
}

std::vector<CutIdeal> grid_cuts(const GeneratorConfig& cfg, const ValueGroup& g,
                                bool integral_proper_only) {
    std::vector<CutIdeal> out;
    const CutIdeal v = unit_cut(g);
    auto push = [&](CutIdeal c) {
        if (integral_proper_only &&
            (!is_integral_cut(c) || c == v))
            return;
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    };
    for (int m = 1; m <= g.rank(); ++m) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<Rational> rho;
            rho.reserve(static_cast<std::size_t>(m));
            for (std::size_t i : idx) rho.push_back(cfg.valuation.rho_grid[i]);
            push(CutIdeal::make(g, CutKind::ge, m, rho));
            push(CutIdeal::make(g, CutKind::gt, m, rho));
            std::size_t p = 0;
            while (p < idx.size()) {
                if (++idx[p] < cfg.valuation.rho_grid.size()) break;
                idx[p] = 0;
                ++p;
            }
            if (p == idx.size()) break;
        }
    }
    return out;
}

}  // namespace rrc
