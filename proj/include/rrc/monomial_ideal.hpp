#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrc {

// Exponent vector of a monomial in n variables. Entries are non-negative for
// monomials of the polynomial ring; Laurent (signed) vectors appear only as
// shifts of fractional modules.
using ExpVec = std::vector<long long>;

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// max(a - b, 0) componentwise; the generator map of a colon by a monomial.
inline ExpVec exp_sub_clamped(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long d = a[i] - b[i];
        r[i] = d > 0 ? d : 0;
    }
    return r;
}

// componentwise max = exponent of lcm.
inline ExpVec exp_join(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

// a divides b, i.e. a <= b componentwise.
inline bool exp_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline long long total_degree(const ExpVec& a) {
    long long d = 0;
    for (long long x : a) d += x;
    return d;
}

inline bool exp_nonnegative(const ExpVec& a) {
    for (long long x : a)
        if (x < 0) return false;
    return true;
}

// Canonical generator order: total degree ascending, ties broken by plain
// lexicographic comparison descending (so x^4 prints before x^3*y).
bool canonical_exp_less(const ExpVec& a, const ExpVec& b);

/// A nonzero monomial ideal of k[x_1..x_n], stored as the antichain of its
/// minimal generators in canonical order. The unit ideal is <1> with the
/// all-zero generator; the zero ideal is not representable.
class MonomialIdeal {
public:
    // Minimalizes: deduplicates and drops generators divisible by another.
    static MonomialIdeal make(int nvars, std::vector<ExpVec> gens);

    static MonomialIdeal unit(int nvars) {
        return make(nvars, {ExpVec(static_cast<std::size_t>(nvars), 0)});
    }
    static MonomialIdeal principal(int nvars, ExpVec g) {
        return make(nvars, {std::move(g)});
    }

    int nvars() const { return nvars_; }
    const std::vector<ExpVec>& gens() const { return gens_; }

    bool contains(const ExpVec& m) const;

    bool is_unit() const {
        return gens_.size() == 1 && total_degree(gens_[0]) == 0;
    }
    bool is_principal() const { return gens_.size() == 1; }

    long long max_generator_degree() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

private:
    MonomialIdeal(int nvars, std::vector<ExpVec> gens)
        : nvars_(nvars), gens_(std::move(gens)) {}

    int nvars_ = 0;
    std::vector<ExpVec> gens_;  // canonical antichain
};

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);  // k >= 1
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// Ideal generated by the union of the generators (the join I + J).
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

// Every generator of a lies in b.
bool subset_of(const MonomialIdeal& a, const MonomialIdeal& b);

// Caches consecutive powers of a fixed base ideal; the closure chain walks
// I^n and I^(n+1) together, so powers are built once and reused. Backed by a
// deque so references stay valid while further powers are appended.
class PowerCache {
public:
    explicit PowerCache(MonomialIdeal base) : pows_{std::move(base)} {}

    const MonomialIdeal& get(int k) {
        if (k < 1) throw std::invalid_argument("PowerCache: exponent must be >= 1");
        while (static_cast<int>(pows_.size()) < k)
            pows_.push_back(multiply(pows_.back(), pows_.front()));
        return pows_[static_cast<std::size_t>(k - 1)];
    }

private:
    std::deque<MonomialIdeal> pows_;
};

}  // namespace rrc
