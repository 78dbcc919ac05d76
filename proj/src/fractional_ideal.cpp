#include "rrc/fractional_ideal.hpp"

#include <algorithm>

namespace rrc {

FractionalMonomialIdeal FractionalMonomialIdeal::make(ExpVec shift, MonomialIdeal num) {
    if (static_cast<int>(shift.size()) != num.nvars())
        throw std::invalid_argument("FractionalMonomialIdeal: shift length mismatch");

    // x^-shift * I with shift signed: negative components multiply I instead.
    ExpVec up(shift.size(), 0);
    ExpVec denom(shift.size(), 0);
    bool needs_up = false;
    for (std::size_t i = 0; i < shift.size(); ++i) {
        if (shift[i] >= 0) {
            denom[i] = shift[i];
        } else {
            up[i] = -shift[i];
            needs_up = true;
        }
    }
    if (needs_up) {
        std::vector<ExpVec> gens;
        gens.reserve(num.gens().size());
        for (const auto& g : num.gens()) gens.push_back(exp_add(g, up));
        num = MonomialIdeal::make(num.nvars(), std::move(gens));
    }

    // strip factors common to the denominator and every generator
    ExpVec common = denom;
    for (const auto& g : num.gens())
        for (std::size_t i = 0; i < common.size(); ++i)
            common[i] = std::min(common[i], g[i]);
    if (total_degree(common) > 0) {
        for (std::size_t i = 0; i < common.size(); ++i) denom[i] -= common[i];
        std::vector<ExpVec> gens;
        gens.reserve(num.gens().size());
        for (const auto& g : num.gens()) {
            ExpVec h(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) h[i] = g[i] - common[i];
            gens.push_back(std::move(h));
        }
        num = MonomialIdeal::make(num.nvars(), std::move(gens));
    }
    return FractionalMonomialIdeal(std::move(denom), std::move(num));
}

FractionalMonomialIdeal frac_multiply(const FractionalMonomialIdeal& a,
                                      const FractionalMonomialIdeal& b) {
    return FractionalMonomialIdeal::make(exp_add(a.denominator(), b.denominator()),
                                         multiply(a.numerator(), b.numerator()));
}

FractionalMonomialIdeal frac_intersect(const FractionalMonomialIdeal& a,
                                       const FractionalMonomialIdeal& b) {
    // common denominator d = max(da, db), numerators shifted up accordingly
    ExpVec d = exp_join(a.denominator(), b.denominator());
    auto lift = [&](const FractionalMonomialIdeal& f) {
        ExpVec up(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) up[i] = d[i] - f.denominator()[i];
        std::vector<ExpVec> gens;
        gens.reserve(f.numerator().gens().size());
        for (const auto& g : f.numerator().gens()) gens.push_back(exp_add(g, up));
        return MonomialIdeal::make(f.nvars(), std::move(gens));
    };
    return FractionalMonomialIdeal::make(d, intersect(lift(a), lift(b)));
}

FractionalMonomialIdeal frac_shift(const FractionalMonomialIdeal& a, const ExpVec& w) {
    ExpVec d(a.denominator().size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.denominator()[i] - w[i];
    return FractionalMonomialIdeal::make(std::move(d), a.numerator());
}

FractionalMonomialIdeal frac_colon(const FractionalMonomialIdeal& a,
                                   const FractionalMonomialIdeal& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("frac_colon: ambient variable count mismatch");
    // (a : b) = intersection over generators j of b.num of x^(e - j) * a,
    // where b = x^-e * J; u*b subset of a iff u + j - e in a for every j.
    bool first = true;
    FractionalMonomialIdeal acc = FractionalMonomialIdeal::unit(a.nvars());
    for (const auto& j : b.numerator().gens()) {
        ExpVec w(j.size());
        for (std::size_t i = 0; i < j.size(); ++i) w[i] = b.denominator()[i] - j[i];
        FractionalMonomialIdeal part = frac_shift(a, w);
        acc = first ? part : frac_intersect(acc, part);
        first = false;
    }
    return acc;
}

FractionalMonomialIdeal endomorphism_ring(const MonomialIdeal& i) {
    auto f = FractionalMonomialIdeal::from_integral(i);
    return frac_colon(f, f);
}

}  // namespace rrc
