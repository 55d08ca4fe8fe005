#include "medsg/apery.hpp"

#include <algorithm>
#include <string>

namespace medsg {

AperySet apery_set(const NumericalSemigroup& S, std::int64_t s, bool hat) {
    if (s == 0) throw Error(ErrorCode::ZeroElement, "Apéry set requires a nonzero element");
    if (!S.contains(s))
        throw Error(ErrorCode::NotInSemigroup, std::to_string(s) + " is not in " + S.str());

    AperySet ap;
    ap.element = s;
    ap.hat = hat;
    ap.elements.assign(static_cast<std::size_t>(s), -1);

    // Smallest member per residue class; every class has one below c + s.
    std::int64_t found = 0;
    for (std::int64_t x = 0; found < s; ++x) {
        std::size_t r = static_cast<std::size_t>(x % s);
        if (ap.elements[r] < 0 && S.contains(x)) {
            ap.elements[r] = x;
            ++found;
        }
    }

    // Cross-check against the other characterization: x ∈ S with x - s ∉ S.
    for (std::int64_t w : ap.elements) {
        if (S.contains(w - s))
            throw Error(ErrorCode::InternalDisagreement,
                        "Apéry characterizations disagree at " + std::to_string(w));
    }

    if (hat) ap.elements[0] = s;
    return ap;
}

bool leq_s(const NumericalSemigroup& S, std::int64_t a, std::int64_t b) {
    return S.contains(b - a);
}

std::vector<std::int64_t> apery_minima(const NumericalSemigroup& S, std::int64_t s) {
    AperySet ap = apery_set(S, s, /*hat=*/true);
    std::vector<std::int64_t> minima;
    for (std::int64_t w : ap.elements) {
        bool minimal = true;
        for (std::int64_t v : ap.elements) {
            if (v != w && leq_s(S, v, w)) {
                minimal = false;
                break;
            }
        }
        if (minimal) minima.push_back(w);
    }
    std::sort(minima.begin(), minima.end());
    return minima;
}

std::vector<std::int64_t> apery_maxima_pf(const NumericalSemigroup& S, std::int64_t s) {
    if (S.is_full()) return {}; // Ap = {0}, maximum is 0, but PF(N) is empty
    AperySet ap = apery_set(S, s, /*hat=*/false);
    std::vector<std::int64_t> pf;
    for (std::int64_t w : ap.elements) {
        bool maximal = true;
        for (std::int64_t v : ap.elements) {
            if (v != w && leq_s(S, w, v)) {
                maximal = false;
                break;
            }
        }
        if (maximal) pf.push_back(w - s);
    }
    std::sort(pf.begin(), pf.end());
    return pf;
}

std::vector<std::int64_t> minimal_generators_via_sums(const NumericalSemigroup& S) {
    if (S.is_full()) return {1};
    std::vector<std::int64_t> members;
    std::int64_t limit = S.conductor() + S.multiplicity();
    for (std::int64_t x = 1; x < limit; ++x)
        if (S.contains(x)) members.push_back(x);

    std::vector<std::int64_t> gens;
    // Generators above c + m cannot exist: anything that large is m + member.
    for (std::int64_t x : members) {
        bool is_sum = false;
        for (std::int64_t a : members) {
            if (2 * a > x) break;
            if (S.contains(x - a)) {
                is_sum = true;
                break;
            }
        }
        if (!is_sum) gens.push_back(x);
    }
    return gens;
}

} // namespace medsg
