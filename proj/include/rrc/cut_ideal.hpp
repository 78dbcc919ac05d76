#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "rrc/value_group.hpp"

namespace rrc {

enum class CutKind { ge, gt };

/// Final segment of a lex value group described by a rational prefix bound:
///   S = { g : prefix_m(g) >lex rho }  plus, for kind ge, { g : prefix_m(g) = rho }.
///
/// Every such set is upward closed and any two are comparable, so cuts form a
/// chain under inclusion. Ideals and fractional ideals of the valuation
/// domain with this value group are read off as S (fractional semantics);
/// integral ideals are the cuts contained in V = S(ge, k, 0).
///
/// Canonical form: rho is integral at discrete positions, and kind gt occurs
/// only when position m is dense. Equal canonical forms denote equal sets and
/// conversely.
class CutIdeal {
public:
    static CutIdeal make(ValueGroup group, CutKind kind, int m, std::vector<Rational> rho);

    const ValueGroup& group() const { return group_; }
    CutKind kind() const { return kind_; }
    int prefix_len() const { return m_; }
    const std::vector<Rational>& rho() const { return rho_; }

    bool contains(const LexVector& g) const;

    // Denotation of arbitrary (not necessarily canonical) data; the ground
    // truth the symbolic rules are validated against.
    static bool raw_contains(const ValueGroup& group, CutKind kind, int m,
                             const std::vector<Rational>& rho, const LexVector& g);

    friend bool operator==(const CutIdeal& a, const CutIdeal& b) {
        return a.group_ == b.group_ && a.kind_ == b.kind_ && a.m_ == b.m_ && a.rho_ == b.rho_;
    }
    friend bool operator!=(const CutIdeal& a, const CutIdeal& b) { return !(a == b); }

private:
    CutIdeal(ValueGroup g, CutKind k, int m, std::vector<Rational> rho)
        : group_(std::move(g)), kind_(k), m_(m), rho_(std::move(rho)) {}

    ValueGroup group_;
    CutKind kind_;
    int m_;
    std::vector<Rational> rho_;
};

// The ring V as a cut (the unit ideal).
CutIdeal unit_cut(const ValueGroup& g);
// P_j = { g : prefix_j(g) > 0 }, canonicalized.
CutIdeal prime_cut(const ValueGroup& g, int level);
// M = P_k.
CutIdeal maximal_cut(const ValueGroup& g);

void require_same_group(const CutIdeal& a, const CutIdeal& b);

// Inclusion order of the denotations: less means S(a) strictly inside S(b).
std::strong_ordering cut_cmp(const CutIdeal& a, const CutIdeal& b);

inline bool cut_subset(const CutIdeal& a, const CutIdeal& b) {
    return cut_cmp(a, b) != std::strong_ordering::greater;
}
inline CutIdeal cut_meet(const CutIdeal& a, const CutIdeal& b) {
    return cut_cmp(a, b) == std::strong_ordering::greater ? b : a;
}
inline CutIdeal cut_join(const CutIdeal& a, const CutIdeal& b) {
    return cut_cmp(a, b) == std::strong_ordering::greater ? a : b;
}

// S(a) contained in the non-negative cone, i.e. the cut is an integral ideal.
inline bool is_integral_cut(const CutIdeal& c) { return cut_subset(c, unit_cut(c.group())); }

// Sums a+b with a in S(A), b in S(B); the ideal product.
CutIdeal cut_multiply(const CutIdeal& a, const CutIdeal& b);
CutIdeal cut_power(const CutIdeal& a, int n);

// { x : x + S(B) subset of S(A) }; the quotient-field colon.
CutIdeal cut_colon(const CutIdeal& a, const CutIdeal& b);

inline CutIdeal cut_inverse(const CutIdeal& c) { return cut_colon(unit_cut(c.group()), c); }
// I * I^-1; the whole ring or a prime (trace property of valuation domains).
inline CutIdeal trace(const CutIdeal& c) { return cut_multiply(c, cut_inverse(c)); }

// a + S(C) for a group element a (multiplication by an element of value a).
CutIdeal cut_shift(const CutIdeal& c, const LexVector& a);

// Full-length attained cut = generated by a single element.
inline bool is_principal_cut(const CutIdeal& c) {
    return c.kind() == CutKind::ge && c.prefix_len() == c.group().rank();
}

std::optional<PrimeSpec> is_prime(const CutIdeal& c);
bool is_idempotent(const CutIdeal& c);
bool is_maximal(const CutIdeal& c);

}  // namespace rrc
