#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrc/fractional_ideal.hpp"
#include "rrc/monomial_ideal.hpp"

namespace rrc {

struct ClosureConfig {
    int n_max = 16;
    int window = 3;
    // 0 = derive from the input: 2 * (max generator degree) + 4.
    long long oracle_degree_bound = 0;
    int oracle_n_bound = 24;

    void validate() const {
        if (n_max < 1 || window < 1 || oracle_n_bound < 1 || oracle_degree_bound < 0)
            throw std::invalid_argument("ClosureConfig: bounds must be positive");
        if (window > n_max)
            throw std::invalid_argument("ClosureConfig: window must not exceed n_max");
    }

    long long degree_bound_for(const MonomialIdeal& i) const {
        return oracle_degree_bound > 0 ? oracle_degree_bound
                                       : 2 * i.max_generator_degree() + 4;
    }
};

/// Trace of the closure chain (I^{n+1} : I^n). The chain ascends and every
/// term contains I. `certified` is set only when the stabilized chain value
/// was reproduced by the enumeration oracle under its larger bounds;
/// consecutive equality alone is a heuristic, not a proof.
struct ChainReport {
    std::vector<MonomialIdeal> terms;     // term[i] = (I^{i+2} : I^{i+1})
    std::optional<int> stabilized_at;     // first n of a `window`-long streak
    bool certified = false;
    int n_max = 0;
    int window = 0;
    std::vector<std::string> warnings;
};

struct ClosureResult {
    MonomialIdeal closure;
    ChainReport report;
};

// (I^{n+1} : I^n); contains I, ascends with n.
MonomialIdeal rr_chain_term(const MonomialIdeal& i, int n);

// Chain union with window-based stabilization detection plus oracle
// certification. Non-stabilization is reported via the warnings, never thrown.
ClosureResult rr_closure(const MonomialIdeal& i, const ClosureConfig& cfg = {});

// Chain union only, no oracle pass; used where many closures are scanned.
ClosureResult rr_closure_chain_only(const MonomialIdeal& i, const ClosureConfig& cfg = {});

// True iff m * I^n lies in I^{n+1} for some n <= oracle_n_bound.
bool rr_oracle_membership(const MonomialIdeal& i, const ExpVec& m, const ClosureConfig& cfg = {});

struct OracleClosure {
    MonomialIdeal ideal;
    // False when a minimal generator touched the enumeration box, which would
    // mean the degree bound truncated the search.
    bool boundary_clean = true;
};

// Minimal generators of { m in the degree box : rr_oracle_membership }.
OracleClosure rr_oracle_closure(const MonomialIdeal& i, const ClosureConfig& cfg = {});

// Lattice points of the Newton polyhedron (two variables only); the exact
// rational lower hull of the generators plus the non-negative orthant.
MonomialIdeal integral_closure_2v(const MonomialIdeal& i);

// Test-oracle companion of integral_closure_2v: m is integral over I iff
// k*m lies in I^k for some k; checked for k <= k_bound.
bool integral_closure_oracle_membership(const MonomialIdeal& i, const ExpVec& m, int k_bound = 24);

// Sally-Vasconcelos stability: I invertible in T = (I:I), tested as I*(T:I) = T.
bool is_stable(const MonomialIdeal& i);

struct LStableVerdict {
    bool holds = false;
    // A positive verdict is always capped: equality was checked for n up to
    // n_max only. A negative verdict is definitive.
    bool capped = false;
};

// (I^n : I^n) = (I : I) for all n <= cfg.n_max.
LStableVerdict is_l_stable(const MonomialIdeal& i, const ClosureConfig& cfg = {});

// Smallest n <= cfg.n_max with I * J^n = J^{n+1}, if any. Requires I within J.
std::optional<int> is_reduction_of(const MonomialIdeal& i, const MonomialIdeal& j,
                                   const ClosureConfig& cfg = {});

// Smallest n <= n_bound such that I^k is Ratliff-Rush (chain verdict) for all
// k in [n, n + run - 1].
std::optional<int> first_power_run_closed(const MonomialIdeal& i, int n_bound, int run = 4,
                                          const ClosureConfig& cfg = {});

}  // namespace rrc
