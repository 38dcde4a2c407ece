#include "dinv/integer.hpp"

#include "dinv/errors.hpp"

#include <limits>

namespace dinv {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw DomainError("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    if (b == 0) throw DomainError("mod_floor: division by zero");
    // fdiv_r takes the sign of b, so the result lies in [0, b) for b > 0.
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1) throw DomainError("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertibleError("mod_inverse: " + to_string(a) + " is not invertible mod " + to_string(m));
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < Int(1000000000000L)) {
        // Deterministic trial division; every caller stays far below this.
        for (Int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) throw ParseError("invalid integer literal '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("invalid integer literal '" + text + "'");
    // mpz_set_str takes '-' but not '+'.
    const char* digits = text.c_str() + (text[0] == '+' ? 1 : 0);
    Int v;
    if (mpz_set_str(v.get_mpz_t(), digits, 10) != 0)
        throw ParseError("invalid integer literal '" + text + "'");
    return v;
}

std::string to_string(const Int& v) {
    return v.get_str();
}

std::optional<std::int64_t> to_int64(const Int& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    long x = v.get_si();
    if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    return static_cast<std::int64_t>(x);
}

} // namespace dinv
