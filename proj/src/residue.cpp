#include "dinv/residue.hpp"

#include "dinv/errors.hpp"

#include <ostream>

namespace dinv {

Residue::Residue(const Int& value, const Int& modulus) : modulus_(modulus) {
    if (modulus < 1) throw DomainError("residue modulus must be positive");
    value_ = mod_floor(value, modulus);
}

void Residue::check_compatible(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_)
        throw DomainError("residue arithmetic across different moduli ("
                          + to_string(a.modulus_) + " vs " + to_string(b.modulus_) + ")");
}

Residue operator+(const Residue& a, const Residue& b) {
    Residue::check_compatible(a, b);
    return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
    Residue::check_compatible(a, b);
    return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
    Residue::check_compatible(a, b);
    return Residue(a.value_ * b.value_, a.modulus_);
}

Residue Residue::inverse() const {
    return Residue(mod_inverse(value_, modulus_), modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.str();
}

} // namespace dinv
