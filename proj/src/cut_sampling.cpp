#include "rrc/cut_sampling.hpp"

namespace rrc {

namespace {

const std::vector<Rational>& dense_values() {
    static const std::vector<Rational> v = {
        Rational(-2), Rational(-3, 2), Rational(-1), Rational(-1, 2), Rational(-1, 4),
        Rational(0),  Rational(1, 4),  Rational(1, 2), Rational(1),   Rational(3, 2),
        Rational(2),  Rational(3)};
    return v;
}

const std::vector<Rational>& positive_eps() {
    static const std::vector<Rational> v = {Rational(1, 4), Rational(1, 2), Rational(1),
                                            Rational(2)};
    return v;
}

Rational random_coord(Component c, Rng& rng) {
    if (c == Component::discrete) return Rational(rng.int_in(-3, 4));
    return rng.pick(dense_values());
}

// Smallest positive step at a coordinate: 1 on a discrete component, a random
// small rational on a dense one.
Rational random_step(Component c, Rng& rng) {
    if (c == Component::discrete) return Rational(rng.int_in(1, 2));
    return rng.pick(positive_eps());
}

LexVector pad_to_rank(const ValueGroup& g, const std::vector<Rational>& prefix) {
    LexVector v(static_cast<std::size_t>(g.rank()), Rational(0));
    for (std::size_t j = 0; j < prefix.size(); ++j) v[j] = prefix[j];
    return v;
}

void randomize_from(const ValueGroup& g, LexVector& v, int from, Rng& rng) {
    for (int j = from; j <= g.rank(); ++j)
        v[static_cast<std::size_t>(j - 1)] = random_coord(g.component(j), rng);
}

}  // namespace

LexVector random_element(const ValueGroup& g, Rng& rng) {
    LexVector v(static_cast<std::size_t>(g.rank()));
    randomize_from(g, v, 1, rng);
    return v;
}

LexVector sample_element_in(const CutIdeal& c, Rng& rng) {
    const ValueGroup& g = c.group();
    const int m = c.prefix_len();
    LexVector v = pad_to_rank(g, c.rho());

    enum { boundary_block, bump } variant;
    if (c.kind() == CutKind::ge)
        variant = rng.chance(1, 2) ? boundary_block : bump;
    else
        variant = bump;

    if (variant == boundary_block) {
        randomize_from(g, v, m + 1, rng);
        return v;
    }
    // raise one prefix coordinate, everything after it is then free
    int j = c.kind() == CutKind::gt && rng.chance(1, 2)
                ? m
                : static_cast<int>(rng.below(static_cast<std::uint64_t>(m))) + 1;
    v[static_cast<std::size_t>(j - 1)] =
        v[static_cast<std::size_t>(j - 1)] + random_step(g.component(j), rng);
    randomize_from(g, v, j + 1, rng);
    return v;
}

LexVector sample_element_out(const CutIdeal& c, Rng& rng) {
    const ValueGroup& g = c.group();
    const int m = c.prefix_len();
    LexVector v = pad_to_rank(g, c.rho());

    if (c.kind() == CutKind::gt && rng.chance(1, 2)) {
        // the unattained boundary block itself
        randomize_from(g, v, m + 1, rng);
        return v;
    }
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(m))) + 1;
    v[static_cast<std::size_t>(j - 1)] =
        v[static_cast<std::size_t>(j - 1)] - random_step(g.component(j), rng);
    randomize_from(g, v, j + 1, rng);
    return v;
}

namespace {

// prefix_t(g) - rho_a - rho_b, as a t-vector.
std::vector<Rational> deficit(const LexVector& g, const CutIdeal& a, const CutIdeal& b, int t) {
    std::vector<Rational> d(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j)
        d[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j)] -
                                         a.rho()[static_cast<std::size_t>(j)] -
                                         b.rho()[static_cast<std::size_t>(j)];
    return d;
}

int first_nonzero(const std::vector<Rational>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) return static_cast<int>(j) + 1;
    return 0;
}

}  // namespace

std::optional<std::pair<LexVector, LexVector>> decompose_product(const CutIdeal& a,
                                                                 const CutIdeal& b,
                                                                 const LexVector& g) {
    require_same_group(a, b);
    const ValueGroup& grp = a.group();
    const int t = std::min(a.prefix_len(), b.prefix_len());

    LexVector x;
    if (a.prefix_len() == b.prefix_len()) {
        bool sa = a.kind() == CutKind::gt;
        bool sb = b.kind() == CutKind::gt;
        if (!sa) {
            x = pad_to_rank(grp, a.rho());  // exact boundary; b absorbs the rest
        } else if (!sb) {
            // give b its exact boundary instead: x = g - pad(rho_b)
            LexVector y = pad_to_rank(grp, b.rho());
            x = vec_sub(g, y);
        } else {
            // both strict at t (dense there): split the surplus
            std::vector<Rational> d = deficit(g, a, b, t);
            int j = first_nonzero(d);
            if (j == 0) return std::nullopt;  // g on the unattained boundary
            Rational eps = j < t ? Rational(1) : half(d.back());
            x = pad_to_rank(grp, a.rho());
            x[static_cast<std::size_t>(t - 1)] = x[static_cast<std::size_t>(t - 1)] + eps;
        }
    } else {
        // boundary value to the longer operand; the shorter one's free tail
        // absorbs everything past t
        const CutIdeal& longer = a.prefix_len() > b.prefix_len() ? a : b;
        LexVector xl = pad_to_rank(grp, longer.rho());
        if (longer.kind() == CutKind::gt) {
            std::size_t ml = static_cast<std::size_t>(longer.prefix_len());
            xl[ml - 1] = xl[ml - 1] + Rational(1, 2);  // dense there by canonicity
        }
        x = (&longer == &a) ? xl : vec_sub(g, xl);
    }

    LexVector y = vec_sub(g, x);
    if (!a.contains(x) || !b.contains(y)) return std::nullopt;
    return std::make_pair(std::move(x), std::move(y));
}

std::optional<LexVector> colon_violation_witness(const CutIdeal& a, const CutIdeal& b,
                                                 const LexVector& x) {
    require_same_group(a, b);
    const ValueGroup& grp = a.group();
    const int ma = a.prefix_len(), mb = b.prefix_len();

    LexVector y;
    if (ma <= mb) {
        if (mb > ma || b.kind() == CutKind::ge) {
            y = pad_to_rank(grp, b.rho());
            if (b.kind() == CutKind::gt) {
                std::size_t i = static_cast<std::size_t>(mb - 1);
                y[i] = y[i] + Rational(1, 2);  // enter S(b); invisible at level ma
            }
        } else {
            // aligned strict denominator: approach the bound from above
            std::vector<Rational> d(static_cast<std::size_t>(ma));
            for (int j = 0; j < ma; ++j)
                d[static_cast<std::size_t>(j)] = a.rho()[static_cast<std::size_t>(j)] -
                                                 b.rho()[static_cast<std::size_t>(j)] -
                                                 x[static_cast<std::size_t>(j)];
            int j = first_nonzero(d);
            if (j == 0 || d[static_cast<std::size_t>(j - 1)].sign() < 0) return std::nullopt;
            Rational eps = j < ma ? Rational(1) : half(d.back());
            y = pad_to_rank(grp, b.rho());
            y[static_cast<std::size_t>(ma - 1)] = y[static_cast<std::size_t>(ma - 1)] + eps;
        }
    } else {
        // denominator shorter: its free tail coordinates do the violating
        std::vector<Rational> d(static_cast<std::size_t>(mb));
        for (int j = 0; j < mb; ++j)
            d[static_cast<std::size_t>(j)] = a.rho()[static_cast<std::size_t>(j)] -
                                             b.rho()[static_cast<std::size_t>(j)] -
                                             x[static_cast<std::size_t>(j)];
        int j = first_nonzero(d);
        if (b.kind() == CutKind::ge) {
            y = pad_to_rank(grp, b.rho());
            if (j == 0) {
                // boundary tie at level mb: dip below a at coordinate mb+1
                std::size_t i = static_cast<std::size_t>(mb);  // 0-based index of mb+1
                y[i] = a.rho()[i] - x[i] - Rational(1);
            } else if (d[static_cast<std::size_t>(j - 1)].sign() < 0) {
                return std::nullopt;
            }
        } else {
            if (j == 0 || d[static_cast<std::size_t>(j - 1)].sign() < 0) return std::nullopt;
            Rational eps = j < mb ? Rational(1) : half(d.back());
            y = pad_to_rank(grp, b.rho());
            y[static_cast<std::size_t>(mb - 1)] = y[static_cast<std::size_t>(mb - 1)] + eps;
        }
    }

    if (!b.contains(y) || a.contains(vec_add(x, y))) return std::nullopt;
    return y;
}

RawCutData random_raw_cut(const ValueGroup& g, Rng& rng, const std::vector<Rational>& grid) {
    RawCutData d;
    d.kind = rng.chance(1, 2) ? CutKind::ge : CutKind::gt;
    d.m = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.rank()))) + 1;
    d.rho.reserve(static_cast<std::size_t>(d.m));
    for (int j = 0; j < d.m; ++j) d.rho.push_back(rng.pick(grid));
    return d;
}

CutIdeal random_cut(const ValueGroup& g, Rng& rng, const std::vector<Rational>& grid,
                    bool integral_only) {
    for (int tries = 0; tries < 64; ++tries) {
        RawCutData d = random_raw_cut(g, rng, grid);
        CutIdeal c = CutIdeal::make(g, d.kind, d.m, std::move(d.rho));
        if (!integral_only || is_integral_cut(c)) return c;
    }
    return maximal_cut(g);
}

}  // namespace rrc
