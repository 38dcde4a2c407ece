#include "dinv/alexander.hpp"

#include "dinv/errors.hpp"

#include <numeric>
#include <sstream>

namespace dinv {

void LaurentPolynomial::set(long exponent, Int coefficient) {
    if (coefficient == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(coefficient);
}

LaurentPolynomial LaurentPolynomial::monomial(const Int& coefficient, long exponent) {
    LaurentPolynomial p;
    p.set(exponent, coefficient);
    return p;
}

Int LaurentPolynomial::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPolynomial::min_exp() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no degree");
    return terms_.begin()->first;
}

long LaurentPolynomial::max_exp() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no degree");
    return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            p.set(ea + eb, p.coeff(ea + eb) + ca * cb);
    return p;
}

LaurentPolynomial LaurentPolynomial::shifted(long shift) const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_[e + shift] = c;
    return p;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return {};
    // Long division from the top; every step must divide exactly. An exact
    // quotient has bottom exponent min_exp() - divisor.min_exp(), so anything
    // pushing below that proves a remainder.
    const Int lead = divisor.terms_.rbegin()->second;
    const long lead_exp = divisor.max_exp();
    const long min_quot_exp = min_exp() - divisor.min_exp();
    LaurentPolynomial rem = *this;
    LaurentPolynomial quot;
    while (!rem.is_zero()) {
        const long e = rem.max_exp() - lead_exp;
        if (e < min_quot_exp) throw DomainError("polynomial division left a remainder");
        const Int c = rem.terms_.rbegin()->second;
        if (c % lead != 0)
            throw DomainError("polynomial division is not exact (coefficient step)");
        LaurentPolynomial m = monomial(c / lead, e);
        quot += m;
        rem -= m * divisor;
    }
    return quot;
}

Int LaurentPolynomial::evaluate_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPolynomial::is_symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

std::string LaurentPolynomial::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    auto abs_str = [](const Int& c) { return to_string(c < 0 ? Int(-c) : c); };
    if (is_symmetric() && coeff(0) != 0) {
        const Int a0 = coeff(0);
        os << to_string(a0);
        for (long e = 1; e <= max_exp(); ++e) {
            Int c = coeff(e);
            if (c == 0) continue;
            os << (c < 0 ? " - " : " + ");
            if (c != 1 && c != -1) os << abs_str(c) << "*";
            os << "(t" << (e == 1 ? "" : "^" + std::to_string(e)) << " + t^-" << e << ")";
        }
        return os.str();
    }
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = c < 0 ? Int(-c) : c;
        if (e == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string LaurentPolynomial::machine() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << e << ":" << to_string(c);
    }
    return os.str();
}

LSpaceKnotModel::LSpaceKnotModel(std::string name_, LaurentPolynomial alexander_, long genus_)
    : name(std::move(name_)), alexander(std::move(alexander_)), genus(genus_) {
    if (genus < 0) throw DomainError("knot model with negative genus");
    if (alexander.is_zero()) throw DomainError("knot model with zero Alexander polynomial");
    if (!alexander.is_symmetric())
        throw DomainError("knot model '" + name + "': Alexander polynomial is not symmetric");
    if (alexander.evaluate_at_one() != 1)
        throw DomainError("knot model '" + name + "': Alexander polynomial is not normalized");
    if (alexander.max_exp() != genus)
        throw DomainError("knot model '" + name + "': genus does not match the top exponent");
}

LSpaceKnotModel unknot() {
    return LSpaceKnotModel("unknot", LaurentPolynomial::one(), 0);
}

LSpaceKnotModel torus_knot(long a, long b) {
    if (a < 2 || b < 2) throw DomainError("torus knot parameters must be at least 2");
    if (std::gcd(a, b) != 1)
        throw DomainError("invalid torus knot: gcd(" + std::to_string(a) + ","
                          + std::to_string(b) + ") != 1");
    auto power_minus_one = [](long n) { // t^n - 1
        LaurentPolynomial p = LaurentPolynomial::monomial(1, n);
        p -= LaurentPolynomial::one();
        return p;
    };
    LaurentPolynomial numerator = power_minus_one(a * b) * power_minus_one(1);
    LaurentPolynomial denominator = power_minus_one(a) * power_minus_one(b);
    LaurentPolynomial delta = numerator.divide_exact(denominator);
    const long genus = (a - 1) * (b - 1) / 2;
    // The quotient lives in degrees [0, 2g]; recenter so coeff(i) == coeff(-i).
    delta = delta.shifted(-genus);
    return LSpaceKnotModel("T(" + std::to_string(a) + "," + std::to_string(b) + ")",
                           std::move(delta), genus);
}

Int torsion_coefficient(const LSpaceKnotModel& k, const Int& i) {
    Int ai = i < 0 ? Int(-i) : i;
    if (ai >= k.genus) return 0;
    const long base = ai.get_si();
    Int t = 0;
    for (long j = 1; base + j <= k.genus; ++j)
        t += Int(j) * k.alexander.coeff(base + j);
    return t;
}

std::vector<std::pair<long, Int>> torsion_table(const LSpaceKnotModel& k) {
    std::vector<std::pair<long, Int>> rows;
    rows.reserve(static_cast<std::size_t>(k.genus) + 1);
    for (long i = 0; i <= k.genus; ++i)
        rows.emplace_back(i, torsion_coefficient(k, Int(i)));
    return rows;
}

} // namespace dinv
