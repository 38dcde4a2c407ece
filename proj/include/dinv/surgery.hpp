#pragma once

#include "dinv/alexander.hpp"
#include "dinv/lens.hpp"
#include "dinv/rational.hpp"

namespace dinv {

// p/q surgery on an L-space knot, slope positive and in lowest terms.
struct SurgeryDescription {
    LSpaceKnotModel knot;
    Rational slope;

    SurgeryDescription(LSpaceKnotModel knot, Rational slope); // slope <= 0 throws
};

// d of the surgered manifold at a label (any integer, reduced mod p):
//   d = d_lens(p, q, i) - 2 * t_{|floor(i'/q)|}(K)
// where i' is the symmetric representative of i. Valid only on slopes
// >= 2*genus - 1; smaller slopes are refused, never extrapolated.
Rational d_surgery(const SurgeryDescription& s, const Int& label);

} // namespace dinv
