#pragma once

#include <cstdint>
#include <vector>

#include "medsg/semigroup.hpp"

namespace medsg {

// Apéry set of s in S, stored in residue order: elements[i] is the element of
// the set congruent to i mod s. The plain set is the smallest member of each
// class (so elements[0] == 0); the hat variant swaps 0 for s itself.
struct AperySet {
    std::int64_t element = 0;
    bool hat = false;
    std::vector<std::int64_t> elements;
};

AperySet apery_set(const NumericalSemigroup& S, std::int64_t s, bool hat = false);

// a ≤_S b iff b - a ∈ S.
bool leq_s(const NumericalSemigroup& S, std::int64_t a, std::int64_t b);

// Minima of the hat-Apéry set under ≤_S; equals the minimal generating set
// when s is the multiplicity.
std::vector<std::int64_t> apery_minima(const NumericalSemigroup& S, std::int64_t s);

// {w - s : w maximal in Ap(S, s) under ≤_S} = PF(S). Uses the plain set: the
// hat variant would report s itself as maximal whenever s is a generator.
std::vector<std::int64_t> apery_maxima_pf(const NumericalSemigroup& S, std::int64_t s);

// Slow route used as a cross-check: an element is a minimal generator iff it
// is not a sum of two nonzero members.
std::vector<std::int64_t> minimal_generators_via_sums(const NumericalSemigroup& S);

} // namespace medsg
