#include "rrc/cut_ideal.hpp"

#include <stdexcept>

namespace rrc {

CutIdeal CutIdeal::make(ValueGroup group, CutKind kind, int m, std::vector<Rational> rho) {
    if (m < 1 || m > group.rank())
        throw std::invalid_argument("CutIdeal: prefix length out of range");
    if (static_cast<int>(rho.size()) != m)
        throw std::invalid_argument("CutIdeal: rho length must equal the prefix length");

    // A non-integer bound at a discrete position is unattainable, so the
    // comparison is decided there: truncate to ge with the ceiling.
    for (int j = 1; j <= m; ++j) {
        const Rational& r = rho[static_cast<std::size_t>(j - 1)];
        if (group.component(j) == Component::discrete && !r.is_integer()) {
            rho.resize(static_cast<std::size_t>(j));
            rho.back() = r.ceil();
            return CutIdeal(std::move(group), CutKind::ge, j, std::move(rho));
        }
    }
    // gt at a discrete final position steps up to the next attained bound.
    if (kind == CutKind::gt && group.component(m) == Component::discrete) {
        rho.back() = rho.back() + Rational(1);
        kind = CutKind::ge;
    }
    return CutIdeal(std::move(group), kind, m, std::move(rho));
}

bool CutIdeal::raw_contains(const ValueGroup& group, CutKind kind, int m,
                            const std::vector<Rational>& rho, const LexVector& g) {
    if (static_cast<int>(g.size()) != group.rank())
        throw std::invalid_argument("CutIdeal: element rank mismatch");
    for (int j = 0; j < m; ++j) {
        auto c = g[static_cast<std::size_t>(j)] <=> rho[static_cast<std::size_t>(j)];
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    }
    return kind == CutKind::ge;
}

bool CutIdeal::contains(const LexVector& g) const {
    return raw_contains(group_, kind_, m_, rho_, g);
}

CutIdeal unit_cut(const ValueGroup& g) {
    return CutIdeal::make(g, CutKind::ge, g.rank(),
                          std::vector<Rational>(static_cast<std::size_t>(g.rank()), Rational(0)));
}

CutIdeal prime_cut(const ValueGroup& g, int level) {
    if (level < 1 || level > g.rank())
        throw std::invalid_argument("prime_cut: level out of range");
    return CutIdeal::make(g, CutKind::gt, level,
                          std::vector<Rational>(static_cast<std::size_t>(level), Rational(0)));
}

CutIdeal maximal_cut(const ValueGroup& g) { return prime_cut(g, g.rank()); }

void require_same_group(const CutIdeal& a, const CutIdeal& b) {
    if (a.group() != b.group())
        throw std::invalid_argument("CutIdeal: value group mismatch");
}

std::strong_ordering cut_cmp(const CutIdeal& a, const CutIdeal& b) {
    require_same_group(a, b);
    const int t = std::min(a.prefix_len(), b.prefix_len());
    for (int j = 0; j < t; ++j) {
        auto c = a.rho()[static_cast<std::size_t>(j)] <=> b.rho()[static_cast<std::size_t>(j)];
        // the higher bound cuts away more: bigger prefix = smaller set
        if (c == std::strong_ordering::less) return std::strong_ordering::greater;
        if (c == std::strong_ordering::greater) return std::strong_ordering::less;
    }
    if (a.prefix_len() == b.prefix_len()) {
        if (a.kind() == b.kind()) return std::strong_ordering::equal;
        // gt drops the boundary block that ge keeps
        return a.kind() == CutKind::gt ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
    // Equal prefixes of different length: a shorter ge keeps the whole
    // boundary block (bigger), a shorter gt discards it entirely (smaller).
    const CutIdeal& shorter = a.prefix_len() < b.prefix_len() ? a : b;
    bool shorter_is_a = a.prefix_len() < b.prefix_len();
    bool shorter_bigger = shorter.kind() == CutKind::ge;
    if (shorter_is_a == shorter_bigger) return std::strong_ordering::greater;
    return std::strong_ordering::less;
}

namespace {

std::vector<Rational> prefix_sum(const CutIdeal& a, const CutIdeal& b, int t) {
    std::vector<Rational> s(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j)
        s[static_cast<std::size_t>(j)] =
            a.rho()[static_cast<std::size_t>(j)] + b.rho()[static_cast<std::size_t>(j)];
    return s;
}

}  // namespace

CutIdeal cut_multiply(const CutIdeal& a, const CutIdeal& b) {
    require_same_group(a, b);
    // Sums bind at the shorter prefix t: the prefixes add, and the boundary
    // block is attained unless an operand of length exactly t is strict
    // (a longer operand always attains its level-t prefix, and any tail past
    // t is absorbed by the other factor's free tail).
    const int t = std::min(a.prefix_len(), b.prefix_len());
    bool strict_a = a.kind() == CutKind::gt && a.prefix_len() == t;
    bool strict_b = b.kind() == CutKind::gt && b.prefix_len() == t;
    CutKind k = (strict_a || strict_b) ? CutKind::gt : CutKind::ge;
    return CutIdeal::make(a.group(), k, t, prefix_sum(a, b, t));
}

CutIdeal cut_power(const CutIdeal& a, int n) {
    if (n < 1) throw std::invalid_argument("cut_power: exponent must be >= 1");
    CutIdeal acc = a;
    for (int i = 1; i < n; ++i) acc = cut_multiply(acc, a);
    return acc;
}

CutIdeal cut_colon(const CutIdeal& a, const CutIdeal& b) {
    require_same_group(a, b);
    const int ma = a.prefix_len(), mb = b.prefix_len();

    if (ma <= mb) {
        // The numerator constrains only the first ma coordinates of x + b.
        // prefix_ma over S(B) attains its bound rho_B|ma except when B is
        // strict at exactly that position, so the residual keeps A's kind
        // there, and a strict denominator at ma relaxes it to ge.
        std::vector<Rational> r(static_cast<std::size_t>(ma));
        for (int j = 0; j < ma; ++j)
            r[static_cast<std::size_t>(j)] =
                a.rho()[static_cast<std::size_t>(j)] - b.rho()[static_cast<std::size_t>(j)];
        CutKind k = a.kind();
        if (mb == ma && b.kind() == CutKind::gt) k = CutKind::ge;
        return CutIdeal::make(a.group(), k, ma, std::move(r));
    }

    // ma > mb: coordinates of b past mb are unconstrained, so x + S(B)
    // sweeps whole blocks at level mb; those fit inside A only strictly
    // above A's level-mb prefix. An attained denominator bound therefore
    // forces a strict result; an unattained one gives ge at the limit.
    std::vector<Rational> r(static_cast<std::size_t>(mb));
    for (int j = 0; j < mb; ++j)
        r[static_cast<std::size_t>(j)] =
            a.rho()[static_cast<std::size_t>(j)] - b.rho()[static_cast<std::size_t>(j)];
    CutKind k = b.kind() == CutKind::ge ? CutKind::gt : CutKind::ge;
    return CutIdeal::make(a.group(), k, mb, std::move(r));
}

CutIdeal cut_shift(const CutIdeal& c, const LexVector& a) {
    if (!c.group().is_valid_element(a))
        throw std::invalid_argument("cut_shift: invalid group element");
    std::vector<Rational> r = c.rho();
    for (int j = 0; j < c.prefix_len(); ++j)
        r[static_cast<std::size_t>(j)] =
            r[static_cast<std::size_t>(j)] + a[static_cast<std::size_t>(j)];
    return CutIdeal::make(c.group(), c.kind(), c.prefix_len(), std::move(r));
}

std::optional<PrimeSpec> is_prime(const CutIdeal& c) {
    // Primes are the canonical images of { prefix_j > 0 }: gt_j(0) at a dense
    // position, ge_j(0,..,0,1) at a discrete one.
    const int j = c.prefix_len();
    for (int i = 0; i + 1 < j; ++i)
        if (!c.rho()[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
    const Rational& last = c.rho().back();
    if (c.group().component(j) == Component::dense) {
        if (c.kind() == CutKind::gt && last.is_zero()) return PrimeSpec{j};
    } else {
        if (c.kind() == CutKind::ge && last == Rational(1)) return PrimeSpec{j};
    }
    return std::nullopt;
}

bool is_idempotent(const CutIdeal& c) { return cut_power(c, 2) == c; }

bool is_maximal(const CutIdeal& c) {
    auto p = is_prime(c);
    return p && p->level == c.group().rank();
}

}  // namespace rrc
