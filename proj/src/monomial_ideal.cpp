#include "rrc/monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace rrc {

bool canonical_exp_less(const ExpVec& a, const ExpVec& b) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;  // within a degree, x-heavy generators first
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("MonomialIdeal: ambient variable count mismatch");
}

namespace {

// Antichain of componentwise-minimal vectors. Two variables get a sweep over
// the x-sorted list; the general case falls back to pairwise domination.
std::vector<ExpVec> minimal_antichain(std::vector<ExpVec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() <= 1) return v;

    if (v[0].size() == 2) {
        // sorted by (x asc, y asc); keep the first entry of each x column
        // whose y is below everything kept so far
        std::vector<ExpVec> keep;
        long long best_y = std::numeric_limits<long long>::max();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0 && v[i][0] == v[i - 1][0]) continue;  // taller in same column
            if (v[i][1] < best_y) {
                keep.push_back(v[i]);
                best_y = v[i][1];
            }
        }
        return keep;
    }

    std::vector<ExpVec> keep;
    for (const auto& cand : v) {
        bool dominated = false;
        for (const auto& k : keep) {
            if (exp_divides(k, cand)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            std::erase_if(keep, [&](const ExpVec& k) { return exp_divides(cand, k); });
            keep.push_back(cand);
        }
    }
    return keep;
}

}  // namespace

MonomialIdeal MonomialIdeal::make(int nvars, std::vector<ExpVec> gens) {
    if (nvars < 1) throw std::invalid_argument("MonomialIdeal: need at least one variable");
    if (gens.empty()) throw std::invalid_argument("MonomialIdeal: empty generator set");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != nvars)
            throw std::invalid_argument("MonomialIdeal: generator length mismatch");
        if (!exp_nonnegative(g))
            throw std::invalid_argument("MonomialIdeal: negative exponent in generator");
    }
    auto mins = minimal_antichain(std::move(gens));
    std::sort(mins.begin(), mins.end(), canonical_exp_less);
    return MonomialIdeal(nvars, std::move(mins));
}

bool MonomialIdeal::contains(const ExpVec& m) const {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("MonomialIdeal: dimension mismatch in membership test");
    for (const auto& g : gens_)
        if (exp_divides(g, m)) return true;
    return false;
}

long long MonomialIdeal::max_generator_degree() const {
    long long d = 0;
    for (const auto& g : gens_) d = std::max(d, total_degree(g));
    return d;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<ExpVec> sums;
    sums.reserve(a.gens().size() * b.gens().size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens()) sums.push_back(exp_add(g, h));
    return MonomialIdeal::make(a.nvars(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
    MonomialIdeal acc = a;
    MonomialIdeal base = a;
    --k;
    while (k > 0) {
        if (k & 1) acc = multiply(acc, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return acc;
}

namespace {

// Intersection of several ideals in two variables via the upper envelope of
// their staircases: Y(x) = max over ideals of the minimal y at column x.
MonomialIdeal intersect_many_2v(int nvars, const std::vector<const MonomialIdeal*>& parts) {
    // each part: gens sorted by x ascending (y strictly descending)
    std::vector<std::vector<ExpVec>> stair(parts.size());
    std::vector<long long> xs;
    long long x_start = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        stair[i] = parts[i]->gens();
        std::sort(stair[i].begin(), stair[i].end());
        x_start = std::max(x_start, stair[i].front()[0]);
        for (const auto& g : stair[i]) xs.push_back(g[0]);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<std::size_t> pos(parts.size(), 0);
    std::vector<ExpVec> out;
    long long prev_y = std::numeric_limits<long long>::max();
    for (long long x : xs) {
        if (x < x_start) continue;
        long long y = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            while (pos[i] + 1 < stair[i].size() && stair[i][pos[i] + 1][0] <= x) ++pos[i];
            y = std::max(y, stair[i][pos[i]][1]);
        }
        if (y < prev_y) {
            out.push_back({x, y});
            prev_y = y;
        }
    }
    return MonomialIdeal::make(nvars, std::move(out));
}

}  // namespace

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    if (a.nvars() == 2) {
        std::vector<const MonomialIdeal*> parts{&a, &b};
        return intersect_many_2v(2, parts);
    }
    std::vector<ExpVec> joins;
    joins.reserve(a.gens().size() * b.gens().size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens()) joins.push_back(exp_join(g, h));
    return MonomialIdeal::make(a.nvars(), std::move(joins));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    // (a : b) = intersection over generators g of b of (a : g)
    std::vector<MonomialIdeal> per_gen;
    per_gen.reserve(b.gens().size());
    for (const auto& g : b.gens()) {
        std::vector<ExpVec> shifted;
        shifted.reserve(a.gens().size());
        for (const auto& h : a.gens()) shifted.push_back(exp_sub_clamped(h, g));
        per_gen.push_back(MonomialIdeal::make(a.nvars(), std::move(shifted)));
    }
    if (a.nvars() == 2) {
        std::vector<const MonomialIdeal*> parts;
        parts.reserve(per_gen.size());
        for (const auto& p : per_gen) parts.push_back(&p);
        return intersect_many_2v(2, parts);
    }
    MonomialIdeal acc = per_gen.front();
    for (std::size_t i = 1; i < per_gen.size(); ++i) acc = intersect(acc, per_gen[i]);
    return acc;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<ExpVec> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::make(a.nvars(), std::move(gens));
}

bool subset_of(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    for (const auto& g : a.gens())
        if (!b.contains(g)) return false;
    return true;
}

}  // namespace rrc
