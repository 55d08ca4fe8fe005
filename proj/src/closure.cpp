#include "medsg/closure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <tuple>

#include "medsg/apery.hpp"

namespace medsg {

namespace {

// Cheap invariant gate shared by every closure producer. The full dual-route
// MED predicate is exercised separately by the test batteries; here e = m is
// the definition.
void check_closure_invariants(const NumericalSemigroup& S, const NumericalSemigroup& result,
                              const char* method) {
    if (result.embedding_dimension() != result.multiplicity() ||
        result.multiplicity() != S.multiplicity() || !S.is_subset_of(result))
        throw Error(ErrorCode::InternalDisagreement,
                    std::string(method) + " closure invariants violated for " + S.str());
}

} // namespace

std::pair<SaturationStep, NumericalSemigroup> saturation_step(const NumericalSemigroup& S) {
    SaturationStep step;
    step.input_generators = S.minimal_generators();

    std::int64_t m = S.multiplicity();
    if (m == 1) return {step, S};

    AperySet hat = apery_set(S, m, /*hat=*/true);
    std::vector<std::int64_t> elems = hat.elements;
    std::sort(elems.begin(), elems.end());

    // A sum lands in the hat set iff it matches the class representative;
    // sums are >= 2m, so the class-0 slot (holding m) never matches.
    auto in_hat = [&](std::int64_t x) {
        std::int64_t r = x % m;
        return r != 0 && hat.elements[static_cast<std::size_t>(r)] == x;
    };

    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j)
            if (in_hat(elems[i] + elems[j]))
                step.witness_triples.push_back({elems[i], elems[j], elems[i] + elems[j]});

    std::sort(step.witness_triples.begin(), step.witness_triples.end(),
              [](const WitnessTriple& a, const WitnessTriple& b) {
                  return std::tie(a.sum, a.left, a.right) < std::tie(b.sum, b.left, b.right);
              });

    for (const WitnessTriple& t : step.witness_triples) step.added.push_back(t.sum - m);
    std::sort(step.added.begin(), step.added.end());
    step.added.erase(std::unique(step.added.begin(), step.added.end()), step.added.end());

    // w_k lies in the plain Apéry set, so w_k - m cannot already belong to S.
    for (std::int64_t a : step.added)
        if (S.contains(a))
            throw Error(ErrorCode::InternalDisagreement,
                        "saturation re-added " + std::to_string(a) + " in " + S.str());

    if (step.added.empty()) return {step, S};
    std::vector<std::int64_t> gens = step.input_generators;
    gens.insert(gens.end(), step.added.begin(), step.added.end());
    return {step, NumericalSemigroup::from_generators(std::move(gens))};
}

ClosureReport med_closure_saturation(const NumericalSemigroup& S) {
    ClosureReport report;
    report.method = "saturation";
    NumericalSemigroup current = S;
    for (;;) {
        auto [step, next] = saturation_step(current);
        if (step.added.empty()) break;
        step.input_generators = current.minimal_generators();
        report.trace.push_back(std::move(step));
        current = std::move(next);
    }
    report.iterations = static_cast<std::int64_t>(report.trace.size());
    report.result = std::move(current);
    check_closure_invariants(S, report.result, "saturation");
    return report;
}

NumericalSemigroup med_closure_formula(const NumericalSemigroup& S) {
    if (S.is_full()) return S;

    const auto& gens = S.minimal_generators();
    std::int64_t m = S.multiplicity();
    std::vector<std::int64_t> aux{m};
    for (std::size_t i = 1; i < gens.size(); ++i) aux.push_back(gens[i] - m);
    NumericalSemigroup T = NumericalSemigroup::from_generators(std::move(aux));

    // (m + T) ∪ {0} is closed by construction: (m+t) + (m+t') = m + (t+t'+m).
    std::int64_t len = T.conductor() + m + 1;
    std::vector<std::uint8_t> table(static_cast<std::size_t>(len), 0);
    table[0] = 1;
    for (std::int64_t x = m; x < len; ++x)
        table[static_cast<std::size_t>(x)] = T.contains(x - m) ? 1 : 0;

    NumericalSemigroup result = NumericalSemigroup::from_member_table(table, false);
    check_closure_invariants(S, result, "formula");
    return result;
}

std::int64_t selmer_conductor_bound(const NumericalSemigroup& S) {
    std::int64_t n = S.embedding_dimension();
    if (n < 2) return 0;
    std::int64_t m = S.multiplicity();
    std::int64_t an = S.minimal_generators().back();
    std::int64_t bound = 2 * an * (m / n) - m + 1;
    if (bound < S.conductor())
        throw Error(ErrorCode::InternalDisagreement,
                    "Selmer bound fell below the conductor for " + S.str());
    return bound;
}

Rational d_bound(const NumericalSemigroup& S) {
    if (S.embedding_dimension() < 2)
        throw Error(ErrorCode::SingleGenerator, "d(S) needs at least two generators");
    std::int64_t a2 = S.minimal_generators()[1];
    return Rational(selmer_conductor_bound(S), a2 - S.multiplicity());
}

namespace {

// Layered min-R table over (arc count t, residue r): dist[t][r] is the least
// sum_{j>=2} k_j r_j with exactly t coefficients, r_j = a_j - m. Some optimal
// representation has every k_j <= m-1, so t <= (m-1)(n-1) layers suffice.
struct CoefficientDp {
    std::int64_t m = 1;
    std::int64_t tmax = 0;
    std::vector<std::vector<std::int64_t>> dist;
    std::vector<std::vector<int>> pred;
};

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

CoefficientDp build_coefficient_dp(const NumericalSemigroup& S) {
    const auto& gens = S.minimal_generators();
    CoefficientDp dp;
    dp.m = S.multiplicity();
    std::int64_t n = S.embedding_dimension();
    dp.tmax = (dp.m - 1) * (n - 1);
    if ((dp.tmax + 1) * dp.m > 50'000'000)
        throw Error(ErrorCode::SearchSpaceTooLarge,
                    "coefficient table would need " + std::to_string((dp.tmax + 1) * dp.m) +
                        " cells");
    dp.dist.assign(static_cast<std::size_t>(dp.tmax + 1),
                   std::vector<std::int64_t>(static_cast<std::size_t>(dp.m), kInf));
    dp.pred.assign(static_cast<std::size_t>(dp.tmax + 1),
                   std::vector<int>(static_cast<std::size_t>(dp.m), -1));
    dp.dist[0][0] = 0;
    for (std::int64_t t = 1; t <= dp.tmax; ++t) {
        for (std::int64_t j = 1; j < n; ++j) {
            std::int64_t rj = gens[static_cast<std::size_t>(j)] - dp.m;
            std::int64_t cls = rj % dp.m;
            for (std::int64_t r = 0; r < dp.m; ++r) {
                std::int64_t pr = (r - cls + dp.m) % dp.m;
                std::int64_t prev = dp.dist[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(pr)];
                if (prev == kInf) continue;
                auto& cell = dp.dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
                if (prev + rj < cell) {
                    cell = prev + rj;
                    dp.pred[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)] = static_cast<int>(j);
                }
            }
        }
    }
    return dp;
}

// Route (a): direct bounded enumeration per eq. maxk, used to cross-check the
// table route on small instances.
std::int64_t max_sum_by_enumeration(const NumericalSemigroup& S, std::int64_t c) {
    const auto& gens = S.minimal_generators();
    std::int64_t m = S.multiplicity();
    std::size_t n = gens.size();
    std::int64_t best = -1;
    std::vector<std::int64_t> k(n, 0);
    for (;;) {
        std::int64_t used = 0, count = 0;
        for (std::size_t j = 1; j < n; ++j) {
            used += k[j] * gens[j];
            count += k[j];
        }
        if (used <= c && (c - used) % m == 0) best = std::max(best, (c - used) / m + count);
        std::size_t j = 1;
        while (j < n && k[j] == m - 1) k[j++] = 0;
        if (j == n) break;
        ++k[j];
    }
    return best;
}

} // namespace

CoefficientSum max_coefficient_sum(const NumericalSemigroup& S, std::int64_t c) {
    if (c < 0 || !S.contains(c))
        throw Error(ErrorCode::NotRepresentable,
                    std::to_string(c) + " is not representable in " + S.str());

    const auto& gens = S.minimal_generators();
    CoefficientSum out;
    out.coefficients.assign(gens.size(), 0);
    if (c == 0) return out;
    if (S.is_full()) {
        out.total = c;
        out.coefficients[0] = c;
        return out;
    }

    std::int64_t m = S.multiplicity();
    CoefficientDp dp = build_coefficient_dp(S);
    std::int64_t target = c % m;
    std::int64_t best_t = -1, best_r = kInf;
    for (std::int64_t t = 0; t <= dp.tmax; ++t) {
        std::int64_t R = dp.dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(target)];
        if (R == kInf || R + m * t > c) continue; // k_1 = (c-R)/m - t must be >= 0
        if (R < best_r) {
            best_r = R;
            best_t = t;
        }
    }
    if (best_t < 0)
        throw Error(ErrorCode::NotRepresentable,
                    std::to_string(c) + " has no bounded representation in " + S.str());

    out.total = (c - best_r) / m;
    std::int64_t t = best_t, r = target;
    while (t > 0) {
        int j = dp.pred[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
        ++out.coefficients[static_cast<std::size_t>(j)];
        r = (r - (gens[static_cast<std::size_t>(j)] - m) % m + m) % m;
        --t;
    }
    out.coefficients[0] = out.total - best_t;

    std::int64_t value = 0, count = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        value += out.coefficients[j] * gens[j];
        count += out.coefficients[j];
    }
    if (value != c || count != out.total || out.coefficients[0] < 0)
        throw Error(ErrorCode::InternalDisagreement,
                    "coefficient witness reconstruction failed for " + std::to_string(c));

    // Cross-check against the bounded enumeration whenever it is affordable.
    double span = 1.0;
    for (std::size_t j = 1; j < gens.size(); ++j) span *= static_cast<double>(m);
    if (span <= 20000.0 && max_sum_by_enumeration(S, c) != out.total)
        throw Error(ErrorCode::InternalDisagreement,
                    "coefficient-sum routes disagree at " + std::to_string(c));
    return out;
}

ClosureReport med_closure_effective(const NumericalSemigroup& S, std::int64_t c_shift_multiples) {
    ClosureReport report;
    report.method = "effective";
    if (S.is_full()) {
        report.result = S;
        return report;
    }

    const auto& gens = S.minimal_generators();
    std::int64_t m = S.multiplicity();
    Rational d = d_bound(S);
    std::int64_t tail = std::accumulate(gens.begin() + 1, gens.end(), std::int64_t{0});
    std::int64_t threshold = (d * Rational(tail)).ceil();

    std::vector<std::int64_t> new_gens{m};
    for (std::int64_t i = 1; i < m; ++i) {
        std::int64_t ci = threshold + ((i - threshold) % m + m) % m;
        while (!S.contains(ci)) ci += m;
        ci += c_shift_multiples * m;

        CoefficientSum rep = max_coefficient_sum(S, ci);
        std::int64_t gi = ci - (rep.total - 1) * m;
        report.per_class.push_back({i, ci, rep.total, gi});
        new_gens.push_back(gi);
    }
    std::sort(new_gens.begin(), new_gens.end());

    for (std::size_t i = 0; i < new_gens.size(); ++i)
        for (std::size_t j = i; j < new_gens.size(); ++j)
            if (std::binary_search(new_gens.begin(), new_gens.end(), new_gens[i] + new_gens[j]))
                throw Error(ErrorCode::InternalDisagreement,
                            "effective generator set is not sum-free for " + S.str());

    report.result = NumericalSemigroup::from_generators(new_gens);
    if (report.result.minimal_generators() != new_gens)
        throw Error(ErrorCode::InternalDisagreement,
                    "effective generators are not minimal for " + S.str());
    report.iterations = m - 1;
    check_closure_invariants(S, report.result, "effective");
    return report;
}

NumericalSemigroup med_closure_intersection(const NumericalSemigroup& S,
                                            std::size_t max_candidate_gaps) {
    if (S.is_full()) return S;

    std::int64_t m = S.multiplicity();
    std::int64_t cS = S.conductor();
    std::vector<std::int64_t> candidates; // gaps above m, decreasing
    for (std::int64_t x = cS - 1; x > m; --x)
        if (!S.contains(x)) candidates.push_back(x);
    if (candidates.size() > max_candidate_gaps)
        throw Error(ErrorCode::SearchSpaceTooLarge,
                    std::to_string(candidates.size()) + " candidate gaps exceed the limit of " +
                        std::to_string(max_candidate_gaps));

    std::size_t len = static_cast<std::size_t>(cS + m);
    std::vector<std::uint8_t> table(S.member_table().begin(), S.member_table().end());
    std::vector<std::uint8_t> acc(len, 1);
    bool found = false;

    std::vector<std::int64_t> hat(static_cast<std::size_t>(m));
    auto leaf = [&]() {
        // Plain Apéry set of m off the table, hat-adjusted in class 0.
        hat[0] = m;
        std::int64_t remaining = m - 1;
        for (std::int64_t x = m + 1; remaining > 0; ++x) {
            std::size_t r = static_cast<std::size_t>(x % m);
            if (r == 0) continue;
            if (hat[r] == 0 && table[static_cast<std::size_t>(x)]) {
                hat[r] = x;
                --remaining;
            }
        }
        for (std::size_t i = 0; i < hat.size(); ++i)
            for (std::size_t j = i; j < hat.size(); ++j) {
                std::int64_t sum = hat[i] + hat[j];
                std::int64_t r = sum % m;
                if (r != 0 && hat[static_cast<std::size_t>(r)] == sum) return; // not MED
            }
        found = true;
        for (std::size_t x = 0; x < len; ++x) acc[x] &= table[x];
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
        if (idx == candidates.size()) {
            std::fill(hat.begin(), hat.end(), 0);
            leaf();
            return;
        }
        dfs(idx + 1); // leave the gap out

        // Adjoin candidates[idx]; values above it are already settled, so the
        // new sums are conclusive.
        std::int64_t u = candidates[idx];
        table[static_cast<std::size_t>(u)] = 1;
        bool closed = true;
        for (std::int64_t v = m; v + u < static_cast<std::int64_t>(len); ++v) {
            if (table[static_cast<std::size_t>(v)] && !table[static_cast<std::size_t>(u + v)]) {
                closed = false;
                break;
            }
        }
        if (closed) dfs(idx + 1);
        table[static_cast<std::size_t>(u)] = 0;
    };
    dfs(0);

    if (!found)
        throw Error(ErrorCode::InternalDisagreement,
                    "no MED superset found for " + S.str());
    NumericalSemigroup result = NumericalSemigroup::from_member_table(acc, false);
    check_closure_invariants(S, result, "intersection");
    return result;
}

bool lemma_conmed_check(const NumericalSemigroup& S, const std::vector<std::int64_t>& coefficients) {
    const auto& gens = S.minimal_generators();
    if (coefficients.size() != gens.size())
        throw Error(ErrorCode::ParseError, "expected one coefficient per minimal generator");
    std::int64_t K = 0, value = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (coefficients[i] < 0)
            throw Error(ErrorCode::ParseError, "coefficients must be nonnegative");
        K += coefficients[i];
        value += coefficients[i] * gens[i];
    }
    if (K < 2)
        throw Error(ErrorCode::KTooSmall, "coefficient sum must be at least 2");
    return med_closure_formula(S).contains(value - (K - 1) * S.multiplicity());
}

bool closure_union_check(const NumericalSemigroup& S, std::int64_t u) {
    NumericalSemigroup M = med_closure_formula(S);
    if (u < 0 || !M.contains(u))
        throw Error(ErrorCode::NotInClosure,
                    std::to_string(u) + " is not in MED(" + S.str() + ")");
    if (u == 0 || S.contains(u)) return med_closure_formula(S) == M;
    std::vector<std::int64_t> gens = S.minimal_generators();
    gens.push_back(u);
    return med_closure_formula(NumericalSemigroup::from_generators(std::move(gens))) == M;
}

} // namespace medsg
