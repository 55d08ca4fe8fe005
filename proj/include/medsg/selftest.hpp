#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "medsg/semigroup.hpp"

namespace medsg::selftest {

struct BatteryResult {
    std::int64_t checks = 0; // individual property assertions that ran
    bool nonpf_closure_break_observed = false;
};

// Every cross-module property on one instance; throws Error on any violation.
// The seed drives sampling (Apéry bases, coefficient vectors, gap pairs) and
// makes a run reproducible.
BatteryResult check_instance(const NumericalSemigroup& S, std::uint64_t seed);

// Deterministic random instance: multiplicity <= m_max, generators <= gen_max,
// gcd 1. Draws go through the engine only (no distribution objects), so the
// sequence is identical across standard libraries.
NumericalSemigroup random_instance(std::mt19937_64& rng, std::int64_t m_max,
                                   std::int64_t gen_max);

// All numerical semigroups with 2 <= m <= m_max, minimal generators <= gen_max,
// one per canonical minimal generating set.
std::vector<NumericalSemigroup> enumerate_small(std::int64_t m_max, std::int64_t gen_max);

} // namespace medsg::selftest
