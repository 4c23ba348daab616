#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "nct/errors.hpp"

namespace nct {

using Integer = mpz_class;

/**
 * Exact rational scalar. Always held in canonical form: gcd(|num|, den) = 1,
 * den > 0, zero is 0/1. Serializes as "p/q", or just "p" when q = 1.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : v_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}
    Rational(long long n, long long d) : v_(static_cast<long>(n), static_cast<long>(d)) {
        canonicalize();
    }
    Rational(const Integer& n, const Integer& d) : v_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

    /// Parse "p/q" or "p". Throws InputError on malformed text.
    static Rational parse(const std::string& text);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw SingularMatrix("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void canonicalize() {
        if (v_.get_den() == 0) throw InputError("rational with zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

/// gcd over Q: the nonnegative generator of aZ + bZ inside Q.
Rational rational_gcd(const Rational& a, const Rational& b);

Integer integer_gcd(const Integer& a, const Integer& b);
Integer integer_lcm(const Integer& a, const Integer& b);

} // namespace nct
