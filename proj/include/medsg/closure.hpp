#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "medsg/rational.hpp"
#include "medsg/semigroup.hpp"

namespace medsg {

// One additive relation w_i + w_j = w_k inside a hat-Apéry set, normalized to
// left <= right.
struct WitnessTriple {
    std::int64_t left = 0;
    std::int64_t right = 0;
    std::int64_t sum = 0;
};

struct SaturationStep {
    std::vector<std::int64_t> input_generators;
    std::vector<WitnessTriple> witness_triples; // sorted by (sum, left)
    std::vector<std::int64_t> added;            // sorted unique w_k - m values
};

struct EffectiveClassRecord {
    std::int64_t residue = 0;
    std::int64_t c_i = 0;
    std::int64_t K_i = 0;
    std::int64_t g_i = 0;
};

struct ClosureReport {
    std::string method;
    NumericalSemigroup result;
    std::vector<SaturationStep> trace;          // saturation only
    std::vector<EffectiveClassRecord> per_class; // effective only
    std::int64_t iterations = 0;
};

// Adjoins w_k - m for every additive relation w_i + w_j = w_k inside
// hat-Ap(S, m). The returned step keeps redundant additions; the successor is
// the canonical semigroup generated by S together with them.
std::pair<SaturationStep, NumericalSemigroup> saturation_step(const NumericalSemigroup& S);

// Iterates saturation_step to its fixed point MED(S). The trace holds the
// proper (non-empty) steps; iterations is their count.
ClosureReport med_closure_saturation(const NumericalSemigroup& S);

// MED(<m, m+r_1, ..., m+r_p>) = (m + <m, r_1, ..., r_p>) ∪ {0}.
NumericalSemigroup med_closure_formula(const NumericalSemigroup& S);

// 2·a_n·floor(m/n) - m + 1, an upper bound for c(S). Returns 0 when n = 1.
std::int64_t selmer_conductor_bound(const NumericalSemigroup& S);

// d(S) = (2·a_n·floor(m/n) - m + 1)/(a_2 - m), exact.
Rational d_bound(const NumericalSemigroup& S);

struct CoefficientSum {
    std::int64_t total = 0;
    std::vector<std::int64_t> coefficients; // aligned with minimal generators
};

// Maximum of k_1 + ... + k_n over representations c = sum k_i a_i in the
// minimal generators, with one witnessing coefficient vector.
CoefficientSum max_coefficient_sum(const NumericalSemigroup& S, std::int64_t c);

// Per-class computation of MED(S): for each residue i pick an admissible c_i,
// reduce by (K_i - 1)m, and generate by the resulting g_i. c_shift_multiples
// moves every c_i up by that many multiples of m; the g_i must not change.
ClosureReport med_closure_effective(const NumericalSemigroup& S,
                                    std::int64_t c_shift_multiples = 0);

// Ground-truth oracle: intersect every MED semigroup T ⊇ S with m(T) = m(S).
// Refuses when more than max_candidate_gaps gaps above m would have to be
// toggled.
NumericalSemigroup med_closure_intersection(const NumericalSemigroup& S,
                                            std::size_t max_candidate_gaps = 20);

// sum k_i a_i - (K-1)·m ∈ MED(S) for K = sum k_i >= 2.
bool lemma_conmed_check(const NumericalSemigroup& S, const std::vector<std::int64_t>& coefficients);

// MED(<S ∪ {u}>) = MED(S) for u ∈ MED(S).
bool closure_union_check(const NumericalSemigroup& S, std::int64_t u);

} // namespace medsg
