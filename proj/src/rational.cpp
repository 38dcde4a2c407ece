#include "dinv/rational.hpp"

#include "dinv/errors.hpp"

#include <ostream>

namespace dinv {

Rational::Rational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
}

void Rational::canonicalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

std::string Rational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

std::string Rational::fraction_string() const {
    return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text), Int(1));
    if (slash == 0 || slash + 1 == text.size())
        throw ParseError("invalid rational literal '" + text + "'");
    Int p = parse_int(text.substr(0, slash));
    Int q = parse_int(text.substr(slash + 1));
    if (q == 0) throw DomainError("rational with zero denominator");
    return Rational(p, q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational reduce_fraction(const Int& p, const Int& q) {
    if (q == 0) throw DomainError("reduce_fraction: zero denominator");
    return Rational(p, q);
}

} // namespace dinv
