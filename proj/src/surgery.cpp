#include "dinv/surgery.hpp"

#include "dinv/errors.hpp"

namespace dinv {

SurgeryDescription::SurgeryDescription(LSpaceKnotModel knot_, Rational slope_)
    : knot(std::move(knot_)), slope(std::move(slope_)) {
    if (slope.sign() <= 0)
        throw DomainError("surgery slope must be positive, got " + slope.str());
}

Rational d_surgery(const SurgeryDescription& s, const Int& label) {
    const Int& p = s.slope.num();
    const Int& q = s.slope.den();
    if (s.slope < Rational(2 * s.knot.genus - 1))
        throw PreconditionError("slope " + s.slope.str() + " is below 2*genus-1 = "
                                + std::to_string(2 * s.knot.genus - 1)
                                + " for " + s.knot.name + "; the surgery formula does not apply");
    Int i = mod_floor(label, p);
    Int sym = symmetric_representative(p, i);
    Int j = floor_div(sym, q);
    return d_lens(p, q, i) - Rational(2) * Rational(torsion_coefficient(s.knot, j));
}

} // namespace dinv
