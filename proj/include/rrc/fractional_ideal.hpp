#pragma once

#include "rrc/monomial_ideal.hpp"

namespace rrc {

/// A fractional monomial module x^-d * I with d >= 0 and I a monomial ideal.
/// Canonical form: no variable divides both x^d and every generator of I.
/// Houses (I:I), I^-1 and friends; reduces to MonomialIdeal when d = 0.
class FractionalMonomialIdeal {
public:
    // shift may be signed: negative components move into the numerator.
    static FractionalMonomialIdeal make(ExpVec shift, MonomialIdeal num);

    static FractionalMonomialIdeal from_integral(MonomialIdeal i) {
        ExpVec zero(static_cast<std::size_t>(i.nvars()), 0);
        return make(std::move(zero), std::move(i));
    }
    static FractionalMonomialIdeal unit(int nvars) {
        return from_integral(MonomialIdeal::unit(nvars));
    }

    const ExpVec& denominator() const { return denom_; }
    const MonomialIdeal& numerator() const { return num_; }
    int nvars() const { return num_.nvars(); }

    bool is_unit() const {
        return total_degree(denom_) == 0 && num_.is_unit();
    }

    // Laurent membership: u lies in the module iff u + d lies in I.
    bool contains(const ExpVec& u) const {
        return num_.contains(exp_add(u, denom_));
    }

    friend bool operator==(const FractionalMonomialIdeal& a,
                           const FractionalMonomialIdeal& b) {
        return a.denom_ == b.denom_ && a.num_ == b.num_;
    }
    friend bool operator!=(const FractionalMonomialIdeal& a,
                           const FractionalMonomialIdeal& b) {
        return !(a == b);
    }

private:
    FractionalMonomialIdeal(ExpVec d, MonomialIdeal n)
        : denom_(std::move(d)), num_(std::move(n)) {}

    ExpVec denom_;       // non-negative after canonicalization
    MonomialIdeal num_;
};

FractionalMonomialIdeal frac_multiply(const FractionalMonomialIdeal& a,
                                      const FractionalMonomialIdeal& b);
FractionalMonomialIdeal frac_intersect(const FractionalMonomialIdeal& a,
                                       const FractionalMonomialIdeal& b);
FractionalMonomialIdeal frac_colon(const FractionalMonomialIdeal& a,
                                   const FractionalMonomialIdeal& b);
inline bool frac_equals(const FractionalMonomialIdeal& a,
                        const FractionalMonomialIdeal& b) {
    return a == b;
}

// x^w * a for a signed shift w.
FractionalMonomialIdeal frac_shift(const FractionalMonomialIdeal& a, const ExpVec& w);

// (I : I) as a fractional module; always contains the unit monomial.
FractionalMonomialIdeal endomorphism_ring(const MonomialIdeal& i);

}  // namespace rrc
