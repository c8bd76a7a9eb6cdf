#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "seifert/errors.hpp"

namespace seifert {

// Arbitrary-precision integer. Everything downstream (matrix entries,
// determinants, orders) runs on these; 64-bit overflows already for modest
// expanded intersection matrices.
using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor(a/b) and ceil(a/b) for b != 0, exact in all sign combinations.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    if (b > 0)
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    else
        mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), Int(-b).get_mpz_t()), q = -q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                     // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}               // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw validation_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Parses "p" or "p/q" (optional sign, decimal digits). Anything else is
    // rejected; we never accept floating-point notation.
    static Rational parse(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Int floor() const { return floor_div(v_.get_num(), v_.get_den()); }
    Int ceil() const { return ceil_div(v_.get_num(), v_.get_den()); }

    // "p/q", or plain "p" when the denominator is 1. Never decimals.
    std::string str() const { return v_.get_str(); }

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw validation_error("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;   // kept canonical: mpq_class operators preserve lowest terms
};

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw validation_error("rational with zero denominator: '" + s + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw validation_error("cannot parse rational: '" + s + "'");
    }
}

} // namespace seifert
