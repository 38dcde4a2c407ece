#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace dinv {

// One generator of a bifiltered complex over F2[U, U^-1]. The stored data
// is the U^0 slice; translates are implicit (U shifts i, j by -1 and the
// grading by -2).
struct CfkGenerator {
    std::string name;
    long fi = 0;
    long fj = 0;
    long grading = 0;
};

// Bifiltered graded complex over F2[U, U^-1]. Because the differential
// drops the grading by exactly 1, the U-power on an arrow x -> y is forced
// to (grading(y) - grading(x) + 1) / 2, so the matrix reduces to a boolean
// adjacency structure with derived powers.
class BifilteredComplex {
public:
    BifilteredComplex(std::vector<CfkGenerator> generators,
                      std::vector<std::set<std::size_t>> differential);

    std::size_t size() const noexcept { return gens_.size(); }
    const CfkGenerator& generator(std::size_t i) const { return gens_.at(i); }
    const std::vector<CfkGenerator>& generators() const noexcept { return gens_; }
    const std::vector<std::set<std::size_t>>& differential() const noexcept { return diff_; }
    bool has_arrow(std::size_t from, std::size_t to) const {
        return diff_[from].count(to) != 0;
    }
    long u_power(std::size_t from, std::size_t to) const; // forced by the gradings
    std::size_t arrow_count() const;

    // "gen <name> <i> <j> <grading>" and "arrow <from> <to> <upower>" lines.
    std::string to_text() const;
    static BifilteredComplex parse_text(const std::string& text);

private:
    std::vector<CfkGenerator> gens_;
    std::vector<std::set<std::size_t>> diff_;
};

// The 2n+1 generator staircase at (0,n),(1,n),(1,n-1),...,(n,0). Corner
// generators (odd positions) carry grading 1 and map to both neighbors;
// the rest carry grading 0, so the surviving homology class sits at 0.
BifilteredComplex staircase(long n);

// Single generator at (0,0), grading 0, no differential.
BifilteredComplex unknot_complex();

// Tensor over F2[U, U^-1] with the Leibniz differential; filtrations and
// gradings add.
BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b);

// Disjoint union; generator names are prefixed only if they would collide.
BifilteredComplex direct_sum(const BifilteredComplex& a, const BifilteredComplex& b);

// One elementary filtered basis change: target += U^power * source.
struct BasisMove {
    std::size_t source = 0;
    std::size_t target = 0;
    long power = 0;
};

struct SplitResult {
    std::vector<BifilteredComplex> summands;
    // Original generator index for each summand position.
    std::vector<std::vector<std::size_t>> summand_indices;
    std::vector<BasisMove> moves;
    // Boolean change-of-basis data in the original index space: column w of
    // `change` expresses new basis vector w in original coordinates, with
    // the U-power of entry (z, w) forced to (grading(z) - grading(w)) / 2.
    std::vector<std::vector<char>> change;
    std::vector<std::vector<char>> change_inv;
};

// Greedy filtered reduction: apply arrow-count-decreasing basis changes
// until none remains, then cut the arrow graph into connected components.
// Every move respects filtration and gradings by construction.
SplitResult split_summands(const BifilteredComplex& x);

// Exact recombination check: change * (direct sum of split differentials)
// * change_inv must reproduce the original differential, and the two basis
// matrices must be mutually inverse.
bool split_recombines(const BifilteredComplex& original, const SplitResult& split);

// Rank of the homology over F2[U, U^-1]. Inverting U makes every graded
// piece isomorphic to the one two below, so the computation collapses to
// exact F2 linear algebra on the two grading parities.
long homology_rank(const BifilteredComplex& x);

bool is_acyclic(const BifilteredComplex& x);

// Grading- and bifiltration-preserving U-equivariant isomorphism search by
// generator matching. Sizes beyond 20 generators raise InconclusiveError
// rather than guessing.
bool isomorphic_filtered(const BifilteredComplex& a, const BifilteredComplex& b);

// Split both, discard acyclic summands, compare what is left.
bool equal_up_to_acyclic(const BifilteredComplex& a, const BifilteredComplex& b);

} // namespace dinv
