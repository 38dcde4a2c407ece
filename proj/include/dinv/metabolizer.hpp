#pragma once

#include "dinv/rational.hpp"

#include <cstdint>
#include <vector>

namespace dinv {

// Finite abelian group given by cyclic factors, with a symmetric linking
// form valued in Q/Z on the generators. Form entries are canonicalized
// into [0, 1), so "vanishes" means "equals 0".
class LinkingGroup {
public:
    LinkingGroup(std::vector<Int> factors, std::vector<std::vector<Rational>> form);

    const std::vector<Int>& factors() const noexcept { return factors_; }
    const std::vector<std::vector<Rational>>& form() const noexcept { return form_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    Int order() const;

    // Bilinear extension of the generator matrix, reduced into [0, 1).
    // Inputs are coefficient vectors over the factors, any representatives.
    Rational form_value(const std::vector<Int>& x, const std::vector<Int>& y) const;
    bool form_vanishes(const std::vector<Int>& x, const std::vector<Int>& y) const;

    // "49+49+121"; "1" for the trivial group.
    std::string factors_string() const;

private:
    std::vector<Int> factors_;
    std::vector<std::vector<Rational>> form_;
};

// Subgroup described by generating vectors over the cyclic factors.
struct Subgroup {
    std::vector<std::vector<Int>> generators;
};

// Span of the generators as mixed-radix element indices, sorted. Guarded:
// refuses groups with more than 10^7 elements.
std::vector<std::uint64_t> subgroup_span(const LinkingGroup& g, const Subgroup& s);

// Coefficient vector for a mixed-radix element index from subgroup_span.
std::vector<Int> decode_element(const LinkingGroup& g, std::uint64_t index);

// True iff |span(S)|^2 = |G| and the form vanishes on all generator pairs
// (bilinearity extends that to the whole span). Non-square |G| is an error:
// no metabolizer can exist there.
bool is_metabolizer(const LinkingGroup& g, const Subgroup& s);

// All metabolizers, by breadth-first growth of isotropic subgroups. Groups
// larger than the bound are refused with a pointer to split_by_primes.
std::vector<Subgroup> enumerate_metabolizers(const LinkingGroup& g,
                                             const Int& bound = Int(1000000));

// One primary component of the Chinese-remainder decomposition. Component
// generator j is embedding_coeff[j] times original generator factor_index[j].
struct PrimaryComponent {
    Int prime;
    LinkingGroup group;
    std::vector<std::size_t> factor_index;
    std::vector<Int> embedding_coeff;
};

// Decomposition with trivial factors dropped; every metabolizer of g is the
// direct sum of metabolizers of the components, and conversely.
std::vector<PrimaryComponent> split_by_primes(const LinkingGroup& g);

// Map a subgroup of a component back into the ambient group.
Subgroup embed_subgroup(const LinkingGroup& ambient, const PrimaryComponent& component,
                        const Subgroup& s);

} // namespace dinv
