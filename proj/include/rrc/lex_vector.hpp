#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include "rrc/rational.hpp"

namespace rrc {

// Element of a lexicographically ordered product of rank-one groups.
// Comparison runs left to right; the first differing coordinate decides.
using LexVector = std::vector<Rational>;

inline void require_same_length(const LexVector& a, const LexVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("LexVector: length mismatch");
}

inline std::strong_ordering lex_compare(const LexVector& a, const LexVector& b) {
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = a[i] <=> b[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

inline LexVector vec_add(const LexVector& a, const LexVector& b) {
    require_same_length(a, b);
    LexVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline LexVector vec_sub(const LexVector& a, const LexVector& b) {
    require_same_length(a, b);
    LexVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline LexVector vec_scale(const LexVector& a, long n) {
    LexVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * Rational(n);
    return r;
}

inline bool is_zero_vector(const LexVector& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

inline LexVector zero_vector(std::size_t k) { return LexVector(k, Rational(0)); }

// First n coordinates.
inline LexVector prefix_of(const LexVector& a, std::size_t n) {
    return LexVector(a.begin(), a.begin() + static_cast<long>(n));
}

}  // namespace rrc
