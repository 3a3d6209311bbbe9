#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace linorb {

/// Arbitrary-precision integer. Intermediates such as d^8 * 8! overflow any
/// machine word well before the multiplicities get interesting.
using Int = mpz_class;

/// n! as an Int.
Int factorial(unsigned n);

/// Exact rational number, always in lowest terms with positive denominator;
/// zero is 0/1. Thin canonicalizing wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den);

    /// Parse "p" or "p/q" (optional leading '-').
    static Rational parse(const std::string& s);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// The value as an Int; throws if the denominator is not 1.
    Int as_integer() const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

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

    Rational pow(unsigned e) const;

private:
    mpq_class v_;  // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace linorb
