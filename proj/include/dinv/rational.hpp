#pragma once

#include "dinv/integer.hpp"

#include <iosfwd>
#include <string>

namespace dinv {

// Exact rational, always in lowest terms with positive denominator.
// Value semantics throughout; no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int numerator, Int denominator); // canonicalizes; denominator 0 throws
    Rational(long numerator) : num_(numerator), den_(1) {} // NOLINT: implicit on purpose
    Rational(const Int& value) : num_(value), den_(1) {}   // NOLINT

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // division by zero throws

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "-2" when integral, "-1/4" otherwise. This is the rendering every CLI
    // table and JSON field uses.
    std::string str() const;

    // Always "num/den", even for integers ("-2/1").
    std::string fraction_string() const;

    // Accepts both renderings above.
    static Rational parse(const std::string& text);

private:
    Int num_;
    Int den_;

    void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Lowest terms with positive denominator; q = 0 throws DomainError.
Rational reduce_fraction(const Int& p, const Int& q);

} // namespace dinv
