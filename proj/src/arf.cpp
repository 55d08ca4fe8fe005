#include "medsg/arf.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "medsg/apery.hpp"

namespace medsg {

bool is_arf_element_definitional(const NumericalSemigroup& S, std::int64_t z) {
    if (z == 0) throw Error(ErrorCode::ZeroElement, "Arf test requires a nonzero element");
    if (!S.contains(z))
        throw Error(ErrorCode::NotInSemigroup, std::to_string(z) + " is not in " + S.str());

    // x, y >= z + c never fail, and neither do pairs with x + y - z >= c; the
    // quantifier collapses to x <= y in S with z <= x and x + y < z + c.
    std::int64_t c = S.conductor();
    std::vector<std::int64_t> window;
    for (std::int64_t x = z; x < z + c; ++x)
        if (S.contains(x)) window.push_back(x);
    for (std::size_t i = 0; i < window.size(); ++i) {
        for (std::size_t j = i; j < window.size(); ++j) {
            std::int64_t sum = window[i] + window[j];
            if (sum - z >= c) break; // later j only grow
            if (!S.contains(sum - z)) return false;
        }
    }
    return true;
}

bool is_arf_element_apery(const NumericalSemigroup& S, std::int64_t z) {
    AperySet ap = apery_set(S, z, /*hat=*/false);
    std::vector<std::int64_t> above;
    for (std::int64_t w : ap.elements)
        if (w > z) above.push_back(w);

    auto in_apery = [&](std::int64_t x) {
        return ap.elements[static_cast<std::size_t>(x % z)] == x;
    };
    for (std::size_t i = 0; i < above.size(); ++i)
        for (std::size_t j = i; j < above.size(); ++j)
            if (in_apery(above[i] + above[j])) return false;
    return true;
}

bool is_arf_element(const NumericalSemigroup& S, std::int64_t z) {
    bool by_def = is_arf_element_definitional(S, z);
    bool by_apery = is_arf_element_apery(S, z);
    if (by_def != by_apery)
        throw Error(ErrorCode::InternalDisagreement,
                    "Arf routes disagree at z=" + std::to_string(z) + " in " + S.str());
    return by_def;
}

bool is_med(const NumericalSemigroup& S) {
    bool by_dim = S.embedding_dimension() == S.multiplicity();
    if (S.multiplicity() > 1) {
        bool by_arf = is_arf_element(S, S.multiplicity());
        if (by_dim != by_arf)
            throw Error(ErrorCode::InternalDisagreement,
                        "e(S)=m(S) and Arf(m) disagree for " + S.str());
    }
    return by_dim;
}

bool is_arf_semigroup(const NumericalSemigroup& S) {
    // Elements > f(S) are Arf automatically, so only N(S)∖{0} matters.
    for (std::int64_t x = 1; x < S.conductor(); ++x)
        if (S.contains(x) && !is_arf_element(S, x)) return false;
    return true;
}

std::int64_t med_frobenius(const NumericalSemigroup& S) {
    if (!is_med(S)) throw Error(ErrorCode::NotMed, S.str() + " is not MED");
    const auto& gens = S.minimal_generators();
    std::int64_t value = gens.back() - gens.front();
    if (value != S.frobenius())
        throw Error(ErrorCode::InternalDisagreement,
                    "MED Frobenius formula mismatch for " + S.str());
    return value;
}

MedGenusDiagnostic med_genus_diagnostic(const NumericalSemigroup& S) {
    if (!is_med(S)) throw Error(ErrorCode::NotMed, S.str() + " is not MED");
    MedGenusDiagnostic d;
    d.direct_genus = invariants(S).genus;

    const auto& gens = S.minimal_generators();
    std::int64_t tail = std::accumulate(gens.begin() + 1, gens.end(), std::int64_t{0});
    d.formula_value = Rational(gens.back()) -
                      (Rational(tail, gens.front()) + Rational(gens.front() + 1, 2));
    return d;
}

} // namespace medsg
