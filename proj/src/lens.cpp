#include "dinv/lens.hpp"

#include "dinv/errors.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace dinv {

namespace {

// Memo table for the recursion. Keys pack (p, q, i) into 21 bits each; the
// rare too-large triple just recomputes without caching. Observationally
// pure either way.
std::shared_mutex memo_mutex;
std::unordered_map<std::uint64_t, Rational> memo; // NOLINT: guarded by memo_mutex

std::optional<std::uint64_t> pack_key(const Int& p, const Int& q, const Int& i) {
    constexpr long limit = 1L << 21;
    if (p >= limit || q >= limit || i >= limit) return std::nullopt;
    auto up = p.get_ui();
    auto uq = q.get_ui();
    auto ui = i.get_ui();
    return (static_cast<std::uint64_t>(up) << 42)
         | (static_cast<std::uint64_t>(uq) << 21)
         | static_cast<std::uint64_t>(ui);
}

// Inputs already normalized: p >= 1, q in [0, p), i in [0, p), gcd(p, q) = 1.
Rational d_lens_reduced(const Int& p, const Int& q, const Int& i) {
    if (p == 1) return Rational(0);
    const auto key = pack_key(p, q, i);
    if (key) {
        std::shared_lock lock(memo_mutex);
        auto it = memo.find(*key);
        if (it != memo.end()) return it->second;
    }
    Int c = 2 * i + 1 - p - q;
    Rational term(c * c - p * q, 4 * p * q);
    Rational rest = d_lens_reduced(q, mod_floor(p, q), mod_floor(i, q));
    Rational result = term - rest;
    if (key) {
        std::unique_lock lock(memo_mutex);
        memo.emplace(*key, result);
    }
    return result;
}

} // namespace

LensSpace::LensSpace(const Int& p_, const Int& q_) : p(p_) {
    if (p < 1) throw DomainError("invalid lens space: p must be positive");
    q = mod_floor(q_, p);
    if (p > 1 && gcd(p, q) != 1)
        throw DomainError("invalid lens space: gcd(" + to_string(p) + ","
                          + to_string(q) + ") != 1");
}

Rational d_lens(const Int& p, const Int& q, const Int& i) {
    LensSpace l(p, q);
    return d_lens_reduced(l.p, l.q, mod_floor(i, l.p));
}

SpincLabel central_label(const Int& p, const Int& q) {
    if (p < 1 || mod_floor(p, 2) == 0)
        throw DomainError("central label needs odd p, got " + to_string(p));
    if (p > 1 && gcd(p, mod_floor(q, p)) != 1)
        throw DomainError("invalid lens space: gcd(" + to_string(p) + "," + to_string(q) + ") != 1");
    return SpincLabel((p + 1) * (q - 1) / 2, p);
}

SpincLabel conjugate_label(const Int& p, const Int& q, const Int& i) {
    LensSpace l(p, q);
    return SpincLabel(p + q - 1 - mod_floor(i, p), p);
}

SpincLabel label_from_group_element(const Int& p, const Int& q, const Int& z) {
    LensSpace l(p, q);
    // Base point ((p+1)(q-1)/2) mod p works verbatim for even p too: q is
    // odd there, so (p+1)(q-1) is even.
    Int base = mod_floor((p + 1) * (q - 1) / 2, p);
    return SpincLabel(base + mod_floor(z, p) * l.q, p);
}

Int symmetric_representative(const Int& p, const Int& i) {
    if (p < 1) throw DomainError("symmetric representative needs positive modulus");
    Int r = mod_floor(i, p);
    if (2 * r > p) r -= p;
    return r;
}

} // namespace dinv
