#pragma once

#include "dinv/integer.hpp"

#include <iosfwd>
#include <string>

namespace dinv {

// Element of Z/mZ stored as the canonical representative in [0, m).
class Residue {
public:
    Residue(const Int& value, const Int& modulus); // reduces; modulus < 1 throws

    const Int& value() const noexcept { return value_; }
    const Int& modulus() const noexcept { return modulus_; }

    Residue operator-() const { return Residue(-value_, modulus_); }
    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);

    Residue inverse() const; // NotInvertibleError when gcd(value, modulus) != 1

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

    std::string str() const { return to_string(value_); }

private:
    Int value_;
    Int modulus_;

    static void check_compatible(const Residue& a, const Residue& b);
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

} // namespace dinv
