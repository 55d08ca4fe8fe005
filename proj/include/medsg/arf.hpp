#pragma once

#include <cstdint>

#include "medsg/rational.hpp"
#include "medsg/semigroup.hpp"

namespace medsg {

// z ∈ S is an Arf element when x + y - z ∈ S for all x, y ∈ S with x, y ≥ z.
// Checked two ways (definition truncated at z + c, and sum-freeness of the
// Apéry-style window); disagreement raises InternalDisagreement.
bool is_arf_element(const NumericalSemigroup& S, std::int64_t z);

// Individual routes, exported for targeted tests.
bool is_arf_element_definitional(const NumericalSemigroup& S, std::int64_t z);
bool is_arf_element_apery(const NumericalSemigroup& S, std::int64_t z);

// S has maximal embedding dimension iff e(S) = m(S), iff m(S) is Arf.
bool is_med(const NumericalSemigroup& S);

// S is Arf iff every nonzero sporadic element is Arf; elements ≥ c are
// automatic.
bool is_arf_semigroup(const NumericalSemigroup& S);

// For MED semigroups, f(S) = (largest minimal generator) - m.
std::int64_t med_frobenius(const NumericalSemigroup& S);

struct MedGenusDiagnostic {
    std::int64_t direct_genus = 0;
    // a_k - ((a_2 + ... + a_k)/a_1 + (a_1+1)/2), exact. Kept as printed even
    // though it does not match the direct count; see med_genus_diagnostic.
    Rational formula_value;
};

// Both quantities for a MED semigroup. The two need not agree; reporting both
// lets callers see the size of the discrepancy.
MedGenusDiagnostic med_genus_diagnostic(const NumericalSemigroup& S);

} // namespace medsg
