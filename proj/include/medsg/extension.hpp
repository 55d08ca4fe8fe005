#pragma once

#include <cstdint>

#include "medsg/semigroup.hpp"

namespace medsg {

// S_r = S ∪ {x_1, ..., x_r} for the r largest pseudo-Frobenius numbers,
// x_1 = f(S) > x_2 > ... The union is again a numerical semigroup; its genus
// is g(S) - r. bound_lhs/bound_rhs are the two sides 2n+t-1 and 2g-t+1 of the
// conductor sandwich, evaluated on S.
struct ExtensionReport {
    std::int64_t r = 0;
    NumericalSemigroup extended;
    std::int64_t genus_drop = 0;
    std::int64_t bound_lhs = 0;
    std::int64_t bound_rhs = 0;
};

ExtensionReport pf_extension(const NumericalSemigroup& S, std::int64_t r);

// c(S) <= 2g(S) - r + 1.
bool conductor_bound_check(const NumericalSemigroup& S, std::int64_t r);

// 2n(S) + t(S) - 1 <= c(S) <= 2g(S) - t(S) + 1, plus f(S) <= 2g(S) - t(S).
bool ideal_bound_check(const NumericalSemigroup& S);

// With H = S_r and the ideal I = S∖{0} of H: c(I) <= 2g(H) + |H∖I|, where
// c(I) = c(S) and |H∖I| = r + 1.
bool blv_ideal_conductor_check(const NumericalSemigroup& S, std::int64_t r);

} // namespace medsg
