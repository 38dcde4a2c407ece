#pragma once

#include "dinv/brcover.hpp"
#include "dinv/metabolizer.hpp"
#include "dinv/surgery.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dinv {

// Connected sum sum_p n_p * K_p, optionally with one extra summand whose
// Alexander polynomial is 1 (its double branched cover is then a homology
// sphere and contributes d = 0).
struct LinearCombination {
    std::map<long, long> terms; // p -> n_p, every n_p nonzero
    bool alexander_one_summand = false;
};

LinearCombination parse_combination(const std::string& text); // "1*K3 + 2*K5 - 1*K8"

struct NormalizedCombination {
    bool empty = false;    // nothing to obstruct
    bool mirrored = false; // the whole combination was negated first
    long q = 0;            // chosen index, coefficient reduced to +1
    std::map<long, long> terms;
    bool alexander_one_summand = false;
};

// Pick q with n_q > 0 (mirror everything first if all coefficients are
// negative) and cancel the q coefficient down to +1 against mirror copies.
NormalizedCombination normalize(const LinearCombination& c);

// One block of the certificate: |copies| summands of the same K_p.
struct SummandReport {
    long p = 0;
    long coefficient = 0;  // original n_p (after q-reduction for p = q)
    Int group_order;       // (2p+1)^2 per copy
    Int label;             // chosen spin-c label, canonical in [0, group_order)
    Rational d_original;   // per-copy d at that label, input orientation
    Rational d_normalized; // same, after the mirroring step (if any)
};

struct ObstructionReport {
    bool obstructed = false;
    bool mirrored = false;
    bool alexander_one_summand = false;
    long q = 0;
    Int witness_element = 0;      // (q+1)(2q+1) in Z/(2q+1)^2, lies in every metabolizer
    long witness_index = 0;       // its label is i_k with k = q
    Int witness_label = 0;        // i_q mod (2q+1)^2
    Rational witness_d;           // always -2 when obstructed
    Rational total_d;             // certificate total for the normalized combination
    std::vector<SummandReport> summands;
    std::vector<std::string> narrative;
    std::string scope;            // what the certificate does and does not claim
};

// The constructive certificate: forced metabolizer on the q component,
// witness element there, spin labels everywhere else, total d = -2 < 0.
ObstructionReport witness(const LinearCombination& c);

// One connected-sum factor for the exhaustive predicate: a rational surgery
// (or a homology-sphere placeholder when absent), possibly reversed.
struct PredicateSummand {
    std::optional<SurgeryDescription> surgery;
    int sign = 1;
};

std::vector<PredicateSummand> predicate_summands(const LinearCombination& c);

// True iff some metabolizer M of the direct-sum linking group satisfies
// d(Y, s_0 + z) >= 0 for every z in M, with s_0 the unique spin structure
// (all group orders here are odd). Exhaustive; large groups are refused
// with a pointer to witness().
bool check_predicate(const std::vector<PredicateSummand>& summands,
                     const Int& bound = Int(1000000));

} // namespace dinv
