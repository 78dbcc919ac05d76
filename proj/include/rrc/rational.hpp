#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rrc {

// Exact rational number, always in lowest terms with positive denominator.
// Arithmetic is arbitrary precision (GMP); there is no floating point
// anywhere in the kernel.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}

    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q". Throws std::invalid_argument on bad input.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
        q.canonicalize();
        return Rational(raw_tag{}, q);
    }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // Largest integer <= value.
    Rational floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return Rational(raw_tag{}, mpq_class(q));
    }

    // Smallest integer >= value.
    Rational ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return Rational(raw_tag{}, mpq_class(q));
    }

    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(raw_tag{}, mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(raw_tag{}, mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(raw_tag{}, mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(raw_tag{}, mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(raw_tag{}, mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    struct raw_tag {};
    Rational(raw_tag, const mpq_class& q) : v_(q) {}  // already canonical

    mpq_class v_;
};

inline Rational half(const Rational& r) { return r / Rational(2); }

}  // namespace rrc
