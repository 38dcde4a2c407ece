#include "dinv/brcover.hpp"

#include "dinv/errors.hpp"

namespace dinv {

namespace {

void check_index(const KpModel& m, long k) {
    if (k < 0 || k > 2 * m.p)
        throw DomainError("index k = " + std::to_string(k) + " out of range [0,"
                          + std::to_string(2 * m.p) + "]");
}

Int shifted_label(long p, long k) {
    return Int(-2) * p * p - p - 1 + Int(k) * (2 * p + 1);
}

} // namespace

KpModel::KpModel(long p_)
    : p(p_),
      order(Int(2 * p_ + 1) * Int(2 * p_ + 1)),
      surgery(torus_knot(2, 5), Rational(Int(2 * p_ + 1) * Int(2 * p_ + 1), Int(2 * p_))) {
    if (p < 3) throw DomainError("p must be at least 3, got " + std::to_string(p));
    if (!is_prime(Int(2 * p + 1)))
        throw DomainError("2p+1 = " + std::to_string(2 * p + 1)
                          + " is not prime; the model requires it");
}

std::vector<Int> metabolizer_labels(const KpModel& m) {
    std::vector<Int> labels;
    labels.reserve(static_cast<std::size_t>(2 * m.p) + 1);
    for (long k = 0; k <= 2 * m.p; ++k) labels.push_back(shifted_label(m.p, k));
    return labels;
}

std::vector<Int> raw_metabolizer_labels(const KpModel& m) {
    const Int shift = Int(m.p) * m.order;
    std::vector<Int> labels;
    labels.reserve(static_cast<std::size_t>(2 * m.p) + 1);
    for (long k = 0; k <= 2 * m.p; ++k) labels.push_back(shifted_label(m.p, k) + shift);
    return labels;
}

Int floor_index(const KpModel& m, long k) {
    check_index(m, k);
    Int fl = floor_div(shifted_label(m.p, k), Int(2 * m.p));
    Int closed = k <= m.p ? Int(k - m.p - 1) : Int(k - m.p);
    if (fl != closed)
        throw InternalError("floor index mismatch at p = " + std::to_string(m.p)
                            + ", k = " + std::to_string(k));
    return fl;
}

Rational d_sigma(const KpModel& m, long k) {
    check_index(m, k);
    Int label = mod_floor(shifted_label(m.p, k), m.order);
    return d_surgery(m.surgery, label);
}

} // namespace dinv
