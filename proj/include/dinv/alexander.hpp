#pragma once

#include "dinv/integer.hpp"

#include <map>
#include <string>
#include <vector>

namespace dinv {

// Laurent polynomial over Z with integer exponents. Zero coefficients are
// never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default; // zero polynomial

    static LaurentPolynomial monomial(const Int& coefficient, long exponent);
    static LaurentPolynomial one() { return monomial(1, 0); }

    const std::map<long, Int>& terms() const noexcept { return terms_; }
    Int coeff(long exponent) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    long min_exp() const; // throws DomainError on the zero polynomial
    long max_exp() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // Exact quotient; throws DomainError when the division leaves a remainder
    // or a coefficient step fails to divide.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    // Multiply by t^shift.
    LaurentPolynomial shifted(long shift) const;

    Int evaluate_at_one() const;
    bool is_symmetric() const; // coeff(i) == coeff(-i) for all i

    // Human form, e.g. "1 - (t + t^-1) + (t^2 + t^-2)" for symmetric input,
    // plain increasing-exponent terms otherwise.
    std::string pretty() const;

    // Machine form: comma separated exponent:coefficient pairs, exponents
    // ascending, e.g. "-2:1,-1:-1,0:1,1:-1,2:1".
    std::string machine() const;

private:
    std::map<long, Int> terms_;

    void set(long exponent, Int coefficient);
};

// A knot as the surgery formula consumes it: a symmetric Alexander
// polynomial with its genus. No diagrams anywhere.
struct LSpaceKnotModel {
    std::string name;
    LaurentPolynomial alexander;
    long genus = 0;

    LSpaceKnotModel(std::string name, LaurentPolynomial alexander, long genus);
};

LSpaceKnotModel unknot();

// The (a,b) torus knot, a,b >= 2 coprime. Alexander polynomial computed by
// exact division of (t^{ab}-1)(t-1) by (t^a-1)(t^b-1), then symmetrized.
LSpaceKnotModel torus_knot(long a, long b);

// t_i(K) = sum_{j>0} j*a_{|i|+j}. Zero whenever |i| >= genus.
Int torsion_coefficient(const LSpaceKnotModel& k, const Int& i);

// Rows (i, t_i) for 0 <= i <= genus.
std::vector<std::pair<long, Int>> torsion_table(const LSpaceKnotModel& k);

} // namespace dinv
