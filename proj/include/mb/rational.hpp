#pragma once

// Exact scalars. Integer is an arbitrary-precision signed integer, Rational
// an arbitrary-precision fraction kept canonical at all times: denominator
// positive, gcd(|num|, den) = 1. Equality is exact; there is no float path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mb {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}            // NOLINT: implicit on purpose
    Rational(const Integer& v) : q_(v) {}  // NOLINT
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // accepts "123", "-7/3", "4/6" (reduced on input)
    static Rational from_string(const std::string& s) {
        mpq_class q;
        try {
            q = mpq_class(s);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // "num/den", or just "num" when den == 1
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    // integer exponent; negative e inverts (0 base rejected)
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        bool invert = e < 0;
        unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        if (invert && is_zero()) throw std::domain_error("Rational: 0 raised to negative power");
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), ue);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), ue);
        return invert ? Rational(d, n) : Rational(n, d);
    }

private:
    mpq_class q_;  // invariant: canonical
};

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace mb
