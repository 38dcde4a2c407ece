#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace dinv {

// Arbitrary precision integer. Labels grow like 4p^3 and sweeps reach p ~ 200,
// so intermediate products overflow 64 bits; nothing fixed-width leaks out of
// the arithmetic layer.
using Int = mpz_class;

// floor(a/b) toward minus infinity, not truncation: floor_div(-1, 6) = -1.
Int floor_div(const Int& a, const Int& b);

// a - b*floor_div(a, b); for b > 0 this is the representative in [0, b).
Int mod_floor(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);

// Unique r in [0, m) with a*r = 1 (mod m). Throws NotInvertibleError when
// gcd(a, m) != 1 and DomainError when m < 1.
Int mod_inverse(const Int& a, const Int& m);

bool is_prime(const Int& n);

// The exact square root when n is a perfect square, nullopt otherwise.
std::optional<Int> exact_sqrt(const Int& n);

// Decimal with optional leading sign; rejects anything else.
Int parse_int(const std::string& text);

std::string to_string(const Int& v);

// Checked narrowing for internal fast paths (hash keys, dense indexing).
std::optional<std::int64_t> to_int64(const Int& v);

} // namespace dinv
