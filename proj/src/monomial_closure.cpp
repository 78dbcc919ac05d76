#include "rrc/monomial_closure.hpp"

#include <algorithm>

#include "rrc/rational.hpp"

namespace rrc {

MonomialIdeal rr_chain_term(const MonomialIdeal& i, int n) {
    if (n < 1) throw std::invalid_argument("rr_chain_term: n must be >= 1");
    PowerCache pc(i);
    return colon(pc.get(n + 1), pc.get(n));
}

namespace {

bool oracle_membership_cached(PowerCache& pc, const ExpVec& m, int n_bound) {
    for (int n = 1; n <= n_bound; ++n) {
        const MonomialIdeal& pn = pc.get(n);
        const MonomialIdeal& pn1 = pc.get(n + 1);
        bool ok = true;
        for (const auto& g : pn.gens()) {
            if (!pn1.contains(exp_add(m, g))) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

OracleClosure oracle_closure_impl(const MonomialIdeal& i, PowerCache& pc,
                                  const ClosureConfig& cfg) {
    const long long bound = cfg.degree_bound_for(i);
    const int n = i.nvars();
    std::vector<ExpVec> hits;
    ExpVec m(static_cast<std::size_t>(n), 0);
    // odometer over the box [0, bound]^n
    while (true) {
        if (oracle_membership_cached(pc, m, cfg.oracle_n_bound)) hits.push_back(m);
        int pos = 0;
        while (pos < n) {
            if (++m[static_cast<std::size_t>(pos)] <= bound) break;
            m[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    OracleClosure res{MonomialIdeal::make(n, std::move(hits)), true};
    for (const auto& g : res.ideal.gens())
        for (long long e : g)
            if (e >= bound) res.boundary_clean = false;
    return res;
}

ClosureResult closure_chain(const MonomialIdeal& i, const ClosureConfig& cfg,
                            PowerCache& pc) {
    ChainReport rep;
    rep.n_max = cfg.n_max;
    rep.window = cfg.window;

    MonomialIdeal acc = i;
    int streak = 1;  // consecutive equal terms seen so far
    for (int n = 1; n <= cfg.n_max; ++n) {
        MonomialIdeal term = colon(pc.get(n + 1), pc.get(n));
        if (n > 1 && term == rep.terms.back())
            ++streak;
        else
            streak = 1;
        rep.terms.push_back(term);
        acc = ideal_sum(acc, term);
        if (streak >= cfg.window) {
            rep.stabilized_at = n - cfg.window + 1;
            break;
        }
    }
    if (!rep.stabilized_at)
        rep.warnings.push_back("chain did not stabilize within n_max=" +
                               std::to_string(cfg.n_max));
    return ClosureResult{std::move(acc), std::move(rep)};
}

}  // namespace

ClosureResult rr_closure_chain_only(const MonomialIdeal& i, const ClosureConfig& cfg) {
    cfg.validate();
    PowerCache pc(i);
    return closure_chain(i, cfg, pc);
}

ClosureResult rr_closure(const MonomialIdeal& i, const ClosureConfig& cfg) {
    cfg.validate();
    PowerCache pc(i);
    ClosureResult res = closure_chain(i, cfg, pc);
    if (res.report.stabilized_at) {
        OracleClosure oc = oracle_closure_impl(i, pc, cfg);
        if (!oc.boundary_clean) {
            res.report.warnings.push_back("oracle hit the degree-bound boundary");
        } else if (oc.ideal == res.closure) {
            res.report.certified = true;
        } else {
            res.report.warnings.push_back(
                "oracle result disagrees with the stabilized chain");
        }
    }
    return res;
}

bool rr_oracle_membership(const MonomialIdeal& i, const ExpVec& m, const ClosureConfig& cfg) {
    cfg.validate();
    if (!exp_nonnegative(m))
        throw std::invalid_argument("rr_oracle_membership: negative exponent");
    PowerCache pc(i);
    return oracle_membership_cached(pc, m, cfg.oracle_n_bound);
}

OracleClosure rr_oracle_closure(const MonomialIdeal& i, const ClosureConfig& cfg) {
    cfg.validate();
    PowerCache pc(i);
    return oracle_closure_impl(i, pc, cfg);
}

MonomialIdeal integral_closure_2v(const MonomialIdeal& i) {
    if (i.nvars() != 2)
        throw std::invalid_argument("integral_closure_2v: supported in two variables only");

    // lower-left convex chain of the generators, x ascending / y descending
    std::vector<ExpVec> pts = i.gens();
    std::sort(pts.begin(), pts.end());
    std::vector<ExpVec> hull;
    for (const auto& p : pts) {
        // keep right turns: drop the middle point while it lies on or above
        // the segment joining its neighbours
        while (hull.size() >= 2) {
            const ExpVec& a = hull[hull.size() - 2];
            const ExpVec& b = hull[hull.size() - 1];
            // cross product (b - a) x (p - a); <= 0 means b sits on or above
            // the chord a-p and contributes nothing to the lower hull
            long long cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    // minimal lattice points column by column: y = ceil of the hull height
    std::vector<ExpVec> out;
    const long long x_lo = hull.front()[0];
    const long long x_hi = hull.back()[0];
    std::size_t edge = 0;
    for (long long x = x_lo; x <= x_hi; ++x) {
        while (edge + 1 < hull.size() && hull[edge + 1][0] < x) ++edge;
        long long y;
        if (edge + 1 >= hull.size()) {
            y = hull.back()[1];
        } else {
            const ExpVec& a = hull[edge];
            const ExpVec& b = hull[edge + 1];
            // height of segment a-b at x, rounded up
            Rational h = Rational(a[1]) +
                         Rational(b[1] - a[1]) * Rational(x - a[0], b[0] - a[0]);
            y = h.ceil().numerator().get_si();
        }
        out.push_back({x, y});
    }
    return MonomialIdeal::make(2, std::move(out));
}

bool integral_closure_oracle_membership(const MonomialIdeal& i, const ExpVec& m, int k_bound) {
    MonomialIdeal p = i;
    for (int k = 1; k <= k_bound; ++k) {
        if (k > 1) p = multiply(p, i);
        ExpVec km(m.size());
        for (std::size_t t = 0; t < m.size(); ++t) km[t] = m[t] * k;
        if (p.contains(km)) return true;
    }
    return false;
}

bool is_stable(const MonomialIdeal& i) {
    FractionalMonomialIdeal t = endomorphism_ring(i);
    FractionalMonomialIdeal ti = frac_colon(t, FractionalMonomialIdeal::from_integral(i));
    return frac_equals(frac_multiply(FractionalMonomialIdeal::from_integral(i), ti), t);
}

LStableVerdict is_l_stable(const MonomialIdeal& i, const ClosureConfig& cfg) {
    cfg.validate();
    FractionalMonomialIdeal t = endomorphism_ring(i);
    PowerCache pc(i);
    for (int n = 2; n <= cfg.n_max; ++n) {
        auto pn = FractionalMonomialIdeal::from_integral(pc.get(n));
        if (frac_colon(pn, pn) != t) return {false, false};
    }
    return {true, true};
}

std::optional<int> is_reduction_of(const MonomialIdeal& i, const MonomialIdeal& j,
                                   const ClosureConfig& cfg) {
    cfg.validate();
    if (!subset_of(i, j))
        throw std::invalid_argument("is_reduction_of: first ideal must lie in the second");
    PowerCache pc(j);
    for (int n = 1; n <= cfg.n_max; ++n) {
        if (multiply(i, pc.get(n)) == pc.get(n + 1)) return n;
    }
    return std::nullopt;
}

std::optional<int> first_power_run_closed(const MonomialIdeal& i, int n_bound, int run,
                                          const ClosureConfig& cfg) {
    cfg.validate();
    PowerCache pc(i);
    std::vector<bool> closed;  // closed[k-1] = I^k Ratliff-Rush by chain verdict
    auto power_closed = [&](int k) {
        while (static_cast<int>(closed.size()) < k) {
            int kk = static_cast<int>(closed.size()) + 1;
            ClosureResult r = rr_closure_chain_only(pc.get(kk), cfg);
            closed.push_back(r.report.stabilized_at && r.closure == pc.get(kk));
        }
        return closed[static_cast<std::size_t>(k - 1)];
    };
    for (int n = 1; n <= n_bound; ++n) {
        bool all = true;
        for (int k = n; k < n + run; ++k) {
            if (!power_closed(k)) {
                all = false;
                break;
            }
        }
        if (all) return n;
    }
    return std::nullopt;
}

}  // namespace rrc
