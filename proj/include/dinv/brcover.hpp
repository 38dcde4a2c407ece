#pragma once

#include "dinv/surgery.hpp"

#include <vector>

namespace dinv {

// The double branched cover of K_p, modeled by its surgery surrogate:
// (2p+1)^2/(2p) surgery on T(2,5). Requires p >= 3 with 2p+1 prime.
struct KpModel {
    long p;
    Int order;                 // (2p+1)^2 = |H_1|
    SurgeryDescription surgery; // T(2,5) at slope (2p+1)^2/(2p)

    explicit KpModel(long p);
};

// The 2p+1 shifted labels i_k = -2p^2 - p - 1 + k(2p+1), k = 0..2p,
// each satisfying |i_k| < (2p+1)^2 / 2.
std::vector<Int> metabolizer_labels(const KpModel& m);

// The same labels before the global shift by p(2p+1)^2:
// (2p^2 + 2p + 1)(2p - 1) + (2p+1)k. Kept around for auditing output.
std::vector<Int> raw_metabolizer_labels(const KpModel& m);

// floor(i_k / 2p), cross-checked against the closed form
// k - p - 1 for 0 <= k <= p and k - p for p < k <= 2p.
Int floor_index(const KpModel& m, long k);

// d of the cover at label i_k.
Rational d_sigma(const KpModel& m, long k);

} // namespace dinv
