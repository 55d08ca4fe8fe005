#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "medsg/errors.hpp"

namespace medsg {

/// A numerical semigroup: an additive submonoid of the nonnegative integers
/// with finite complement. Canonical value = the unique minimal generating
/// set plus a dense membership table over [0, conductor + multiplicity).
///
/// Immutable after construction; cheap to copy, safe to share across threads.
class NumericalSemigroup {
public:
    /// The full semigroup ℤ≥0.
    NumericalSemigroup() : min_gens_{1}, member_{1} {}

    /// Builds the semigroup generated by `gens`. Input may be unsorted,
    /// contain duplicates or redundant generators; the minimal generating
    /// set is recomputed. Requires positive entries with gcd 1.
    static NumericalSemigroup from_generators(std::vector<std::int64_t> gens);

    /// Builds a semigroup from an explicit membership table over [0, n);
    /// every integer >= n is implicitly a member. When `validate_closure`
    /// is set, closure under addition is checked and an Error is raised on
    /// violation; callers pass false only for sets closed by construction.
    static NumericalSemigroup from_member_table(const std::vector<std::uint8_t>& table,
                                                bool validate_closure);

    const std::vector<std::int64_t>& minimal_generators() const { return min_gens_; }
    std::int64_t multiplicity() const { return multiplicity_; }
    std::int64_t frobenius() const { return frobenius_; }
    std::int64_t conductor() const { return conductor_; }
    std::int64_t embedding_dimension() const { return static_cast<std::int64_t>(min_gens_.size()); }

    bool contains(std::int64_t x) const {
        if (x < 0) return false;
        if (x >= conductor_) return true;
        return member_[static_cast<std::size_t>(x)] != 0;
    }

    /// Membership table over [0, conductor + multiplicity).
    std::span<const std::uint8_t> member_table() const { return member_; }

    bool is_full() const { return multiplicity_ == 1; }

    /// Equality of the underlying sets, i.e. identical minimal generators.
    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.min_gens_ == b.min_gens_;
    }

    bool is_subset_of(const NumericalSemigroup& other) const;

    /// "<7,9,11,15>"
    std::string str() const;

private:
    std::vector<std::int64_t> min_gens_;
    std::int64_t multiplicity_ = 1;
    std::int64_t frobenius_ = -1;
    std::int64_t conductor_ = 0;
    std::vector<std::uint8_t> member_;
};

/// One-shot bundle of the classical invariants.
struct InvariantRecord {
    std::vector<std::int64_t> gaps;             // G(S), increasing
    std::int64_t genus = 0;                     // g = #G(S)
    std::int64_t frobenius = -1;                // f = max G(S), -1 when none
    std::int64_t conductor = 0;                 // c = f + 1
    std::vector<std::int64_t> sporadic;         // N(S) = S ∩ [0, f], increasing
    std::int64_t n = 0;                         // #N(S)
    std::vector<std::int64_t> pseudo_frobenius; // PF(S), increasing
    std::int64_t type = 0;                      // t = #PF(S)
    std::int64_t multiplicity = 1;              // m
    std::int64_t embedding_dimension = 1;       // e
};

InvariantRecord invariants(const NumericalSemigroup& S);

/// True iff t(S) = 1, equivalently g(S) = c(S)/2; both routes are evaluated
/// and must agree. The full semigroup is symmetric by convention.
bool is_symmetric(const NumericalSemigroup& S);

} // namespace medsg
