#include "medsg/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace medsg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyGenerators: return "EmptyGenerators";
        case ErrorCode::ZeroGenerator: return "ZeroGenerator";
        case ErrorCode::GeneratorTooLarge: return "GeneratorTooLarge";
        case ErrorCode::NonCoprime: return "NonCoprime";
        case ErrorCode::NotInSemigroup: return "NotInSemigroup";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::NotMed: return "NotMed";
        case ErrorCode::SingleGenerator: return "SingleGenerator";
        case ErrorCode::NotRepresentable: return "NotRepresentable";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::NotInClosure: return "NotInClosure";
        case ErrorCode::RTooLarge: return "RTooLarge";
        case ErrorCode::TypeZero: return "TypeZero";
        case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    }
    return "UnknownError";
}

namespace {

// Smallest member of each residue class mod m, scanned off a raw table in
// which everything at index >= conductor is a member. Returns the hat-Apéry
// set of m in residue order (class 0 holds m itself, not 0).
std::vector<std::int64_t> hat_apery_of_multiplicity(const std::vector<std::uint8_t>& member,
                                                    std::int64_t conductor, std::int64_t m) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(m), -1);
    std::int64_t found = 0;
    auto in = [&](std::int64_t x) {
        return x >= conductor || member[static_cast<std::size_t>(x)] != 0;
    };
    for (std::int64_t x = 1; found < m; ++x) {
        std::size_t r = static_cast<std::size_t>(x % m);
        if (w[r] < 0 && in(x)) {
            w[r] = x;
            ++found;
        }
    }
    return w;
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> gens) {
    if (gens.empty())
        throw Error(ErrorCode::EmptyGenerators, "at least one generator is required");
    for (std::int64_t g : gens) {
        if (g <= 0)
            throw Error(ErrorCode::ZeroGenerator, "generators must be positive, got " + std::to_string(g));
        if (g >= (std::int64_t{1} << 31))
            throw Error(ErrorCode::GeneratorTooLarge, "generators must be < 2^31, got " + std::to_string(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t g = 0;
    for (std::int64_t a : gens) g = std::gcd(g, a);
    if (g != 1)
        throw Error(ErrorCode::NonCoprime, "gcd of generators is " + std::to_string(g));

    NumericalSemigroup S;
    S.min_gens_.clear();
    std::int64_t m = gens.front();

    if (m == 1) {
        S.min_gens_ = {1};
        S.multiplicity_ = 1;
        S.frobenius_ = -1;
        S.conductor_ = 0;
        S.member_ = {1}; // table over [0, c+m) = [0, 1)
        return S;
    }

    // Mark representable integers up to a bound; the bound is grown until the
    // table ends with m consecutive members, which certifies that every larger
    // integer is a member as well.
    std::int64_t bound = std::max<std::int64_t>(2 * gens.back() + m, 16);
    std::vector<std::uint8_t> mark;
    std::int64_t last_gap = -1;
    for (;;) {
        mark.assign(static_cast<std::size_t>(bound + 1), 0);
        mark[0] = 1;
        for (std::int64_t x = 1; x <= bound; ++x) {
            for (std::int64_t a : gens) {
                if (a > x) break;
                if (mark[static_cast<std::size_t>(x - a)]) {
                    mark[static_cast<std::size_t>(x)] = 1;
                    break;
                }
            }
        }
        last_gap = -1;
        for (std::int64_t x = bound; x >= 1; --x) {
            if (!mark[static_cast<std::size_t>(x)]) {
                last_gap = x;
                break;
            }
        }
        if (bound - last_gap >= m) break;
        bound *= 2;
    }

    S.multiplicity_ = m;
    S.frobenius_ = last_gap;
    S.conductor_ = last_gap + 1;
    S.member_.assign(mark.begin(), mark.begin() + static_cast<std::size_t>(S.conductor_ + m));

    // Minimal generators = the ≤_S-minima of hat-Ap(S, m).
    std::vector<std::int64_t> hat = hat_apery_of_multiplicity(S.member_, S.conductor_, m);
    for (std::int64_t w : hat) {
        bool minimal = true;
        for (std::int64_t v : hat) {
            if (v != w && S.contains(w - v)) {
                minimal = false;
                break;
            }
        }
        if (minimal) S.min_gens_.push_back(w);
    }
    std::sort(S.min_gens_.begin(), S.min_gens_.end());
    return S;
}

NumericalSemigroup NumericalSemigroup::from_member_table(const std::vector<std::uint8_t>& table,
                                                         bool validate_closure) {
    if (table.empty() || !table[0])
        throw Error(ErrorCode::EmptyGenerators, "member table must contain 0");

    std::int64_t n = static_cast<std::int64_t>(table.size());
    std::int64_t m = -1;
    for (std::int64_t x = 1; x < n; ++x) {
        if (table[static_cast<std::size_t>(x)]) {
            m = x;
            break;
        }
    }
    if (m < 0) m = n; // no member below n: smallest nonzero member is n itself

    std::int64_t last_gap = -1;
    for (std::int64_t x = n - 1; x >= 1; --x) {
        if (!table[static_cast<std::size_t>(x)]) {
            last_gap = x;
            break;
        }
    }

    if (validate_closure) {
        for (std::int64_t x = m; x < n; ++x) {
            if (!table[static_cast<std::size_t>(x)]) continue;
            for (std::int64_t y = x; y < n - x; ++y) {
                if (table[static_cast<std::size_t>(y)] && !table[static_cast<std::size_t>(x + y)])
                    throw Error(ErrorCode::InternalDisagreement,
                                "set not closed under addition: " + std::to_string(x) + "+" +
                                    std::to_string(y) + " missing");
            }
        }
    }

    NumericalSemigroup S;
    S.min_gens_.clear();
    S.multiplicity_ = m;
    S.frobenius_ = last_gap;
    S.conductor_ = last_gap + 1;
    std::int64_t len = S.conductor_ + m;
    S.member_.assign(static_cast<std::size_t>(len), 1);
    for (std::int64_t x = 0; x < std::min(len, n); ++x)
        S.member_[static_cast<std::size_t>(x)] = table[static_cast<std::size_t>(x)];

    if (m == 1) {
        S.min_gens_ = {1};
        return S;
    }
    std::vector<std::int64_t> hat = hat_apery_of_multiplicity(S.member_, S.conductor_, m);
    for (std::int64_t w : hat) {
        bool minimal = true;
        for (std::int64_t v : hat) {
            if (v != w && S.contains(w - v)) {
                minimal = false;
                break;
            }
        }
        if (minimal) S.min_gens_.push_back(w);
    }
    std::sort(S.min_gens_.begin(), S.min_gens_.end());
    return S;
}

bool NumericalSemigroup::is_subset_of(const NumericalSemigroup& other) const {
    std::int64_t limit = std::max(conductor_ + multiplicity_,
                                  other.conductor_ + other.multiplicity_);
    for (std::int64_t x = 0; x < limit; ++x)
        if (contains(x) && !other.contains(x)) return false;
    return true;
}

std::string NumericalSemigroup::str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < min_gens_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(min_gens_[i]);
    }
    out += ">";
    return out;
}

InvariantRecord invariants(const NumericalSemigroup& S) {
    InvariantRecord rec;
    rec.multiplicity = S.multiplicity();
    rec.embedding_dimension = S.embedding_dimension();
    rec.frobenius = S.frobenius();
    rec.conductor = S.conductor();

    for (std::int64_t x = 0; x < S.conductor(); ++x) {
        if (S.contains(x))
            rec.sporadic.push_back(x);
        else
            rec.gaps.push_back(x);
    }
    rec.genus = static_cast<std::int64_t>(rec.gaps.size());
    rec.n = static_cast<std::int64_t>(rec.sporadic.size());

    // PF by definition: gaps x with x + s in S for every nonzero s in S.
    // Only s < c matters; for s >= c, x + s >= c is automatic.
    for (std::int64_t x : rec.gaps) {
        bool pf = true;
        for (std::int64_t s : rec.sporadic) {
            if (s == 0) continue;
            if (!S.contains(x + s)) {
                pf = false;
                break;
            }
        }
        if (pf) rec.pseudo_frobenius.push_back(x);
    }
    rec.type = static_cast<std::int64_t>(rec.pseudo_frobenius.size());
    return rec;
}

bool is_symmetric(const NumericalSemigroup& S) {
    if (S.is_full()) return true; // convention: t = 0 but no gaps to pair
    InvariantRecord rec = invariants(S);
    bool by_type = rec.type == 1;
    bool by_genus = 2 * rec.genus == rec.conductor;
    if (by_type != by_genus)
        throw Error(ErrorCode::InternalDisagreement,
                    "symmetry criteria disagree for " + S.str());
    return by_type;
}

} // namespace medsg
