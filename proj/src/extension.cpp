#include "medsg/extension.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace medsg {

namespace {

InvariantRecord checked_invariants(const NumericalSemigroup& S, std::int64_t r) {
    InvariantRecord rec = invariants(S);
    if (rec.type == 0)
        throw Error(ErrorCode::TypeZero, "PF(" + S.str() + ") is empty");
    if (r < 1 || r > rec.type)
        throw Error(ErrorCode::RTooLarge,
                    "r=" + std::to_string(r) + " outside [1, t=" + std::to_string(rec.type) + "]");
    return rec;
}

} // namespace

ExtensionReport pf_extension(const NumericalSemigroup& S, std::int64_t r) {
    InvariantRecord rec = checked_invariants(S, r);

    std::vector<std::uint8_t> table(S.member_table().begin(), S.member_table().end());
    // PF stored increasing; take the r largest, starting from f(S).
    for (std::int64_t k = 0; k < r; ++k) {
        std::int64_t x = rec.pseudo_frobenius[rec.pseudo_frobenius.size() - 1 - static_cast<std::size_t>(k)];
        table[static_cast<std::size_t>(x)] = 1;
    }

    ExtensionReport report;
    report.r = r;
    report.extended = NumericalSemigroup::from_member_table(table, /*validate_closure=*/true);
    report.genus_drop = rec.genus - invariants(report.extended).genus;
    if (report.genus_drop != r)
        throw Error(ErrorCode::InternalDisagreement,
                    "genus dropped by " + std::to_string(report.genus_drop) + ", expected " +
                        std::to_string(r));
    report.bound_lhs = 2 * rec.n + rec.type - 1;
    report.bound_rhs = 2 * rec.genus - rec.type + 1;
    return report;
}

bool conductor_bound_check(const NumericalSemigroup& S, std::int64_t r) {
    InvariantRecord rec = checked_invariants(S, r);
    return rec.conductor <= 2 * rec.genus - r + 1;
}

bool ideal_bound_check(const NumericalSemigroup& S) {
    InvariantRecord rec = invariants(S);
    if (rec.type == 0)
        throw Error(ErrorCode::TypeZero, "PF(" + S.str() + ") is empty");
    bool lower = 2 * rec.n + rec.type - 1 <= rec.conductor;
    bool upper = rec.conductor <= 2 * rec.genus - rec.type + 1;
    bool frob = rec.frobenius <= 2 * rec.genus - rec.type;
    return lower && upper && frob;
}

bool blv_ideal_conductor_check(const NumericalSemigroup& S, std::int64_t r) {
    ExtensionReport report = pf_extension(S, r);

    // |H∖I| with I = S∖{0}: the adjoined PF prefix plus 0.
    std::int64_t removed = 0;
    for (std::int64_t x = 0; x < S.conductor(); ++x)
        if (report.extended.contains(x) && !(S.contains(x) && x != 0)) ++removed;
    if (removed != r + 1)
        throw Error(ErrorCode::InternalDisagreement,
                    "|S_r \\ I| = " + std::to_string(removed) + ", expected " +
                        std::to_string(r + 1));

    std::int64_t genus_h = invariants(report.extended).genus;
    return S.conductor() <= 2 * genus_h + (r + 1);
}

} // namespace medsg
