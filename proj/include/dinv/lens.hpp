#pragma once

#include "dinv/rational.hpp"
#include "dinv/residue.hpp"

namespace dinv {

// Spin-c structures on a space with H_1 = Z/p are tracked purely as labels
// in [0, p); the identification with actual spin-c structures is fixed once
// by the conventions below and never re-derived.
using SpincLabel = Residue;

// -L(p, q) with q normalized into (0, p), gcd(p, q) = 1. p = 1 is allowed
// and denotes S^3 (q normalizes to 0 there).
struct LensSpace {
    Int p;
    Int q;

    LensSpace(const Int& p, const Int& q); // reduces q mod p, checks coprimality
};

// d(-L(p,q), i) by the recursion
//   d(-L(p,q), i) = ((2i+1-p-q)^2 - pq) / (4pq) - d(-L(q, p mod q), i mod q)
// with d(S^3) = 0. The label i is accepted as any integer and reduced mod p.
// Memoized internally; safe for concurrent callers.
Rational d_lens(const Int& p, const Int& q, const Int& i);

// Label of the central spin-c structure: ((p+1)(q-1)/2) mod p. Odd p only;
// even p has no unique central label.
SpincLabel central_label(const Int& p, const Int& q);

// Conjugation on labels: i -> (p+q-1-i) mod p. An involution; fixes the
// central label when p is odd.
SpincLabel conjugate_label(const Int& p, const Int& q, const Int& i);

// The affine bijection Z/p -> labels sending 0 to the central label and a
// group step of 1 to a label step of q.
SpincLabel label_from_group_element(const Int& p, const Int& q, const Int& z);

// The representative of i mod p in (-p/2, p/2]. For even p the boundary
// value p/2 keeps the + sign.
Int symmetric_representative(const Int& p, const Int& i);

} // namespace dinv
