#include "medsg/selftest.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "medsg/apery.hpp"
#include "medsg/arf.hpp"
#include "medsg/closure.hpp"
#include "medsg/extension.hpp"
#include "medsg/rational.hpp"

namespace medsg::selftest {

namespace {

// Bounded draw through the raw engine; biased but identical on every
// standard library, which std::uniform_int_distribution is not.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Battery {
    const NumericalSemigroup& S;
    InvariantRecord rec;
    std::mt19937_64 rng;
    BatteryResult out;

    Battery(const NumericalSemigroup& s, std::uint64_t seed) : S(s), rec(invariants(s)), rng(seed) {}

    void require(bool ok, const char* what) {
        ++out.checks;
        if (!ok)
            throw Error(ErrorCode::InternalDisagreement,
                        std::string(what) + " failed for " + S.str());
    }

    std::int64_t random_member(std::int64_t lo, std::int64_t hi) {
        std::int64_t x = draw(rng, lo, hi);
        while (!S.contains(x)) ++x;
        return x;
    }

    void core_suite() {
        require(rec.n + rec.genus == rec.conductor, "n + g = c");
        require(rec.embedding_dimension <= rec.multiplicity, "e <= m");
        require(static_cast<std::int64_t>(rec.gaps.size()) == rec.genus, "gap count");
        require(minimal_generators_via_sums(S) == S.minimal_generators(),
                "minimal generator routes");
        is_symmetric(S); // dual-route criterion asserted inside
        ++out.checks;
        if (S.embedding_dimension() >= 2) {
            selmer_conductor_bound(S); // asserts >= c(S) internally
            ++out.checks;
            require(d_bound(S) > Rational(0), "d(S) > 0");
        }
    }

    void apery_one(std::int64_t s) {
        AperySet plain = apery_set(S, s, false);
        AperySet hat = apery_set(S, s, true);
        require(static_cast<std::int64_t>(plain.elements.size()) == s, "#Ap(S,s) = s");
        require(plain.elements[0] == 0 && hat.elements[0] == s, "hat/plain swap");
        for (std::int64_t i = 0; i < s; ++i) {
            std::int64_t w = plain.elements[static_cast<std::size_t>(i)];
            require(w % s == i, "Apery residue alignment");
            require(i == 0 || !S.contains(w - s), "Apery w - s not in S");
            require(i == 0 || hat.elements[static_cast<std::size_t>(i)] == w, "hat tail equal");
        }
        require(apery_minima(S, s) == S.minimal_generators(), "Apery minima = generators");
        require(apery_maxima_pf(S, s) == rec.pseudo_frobenius, "Apery maxima - s = PF");

        // Every minimal generator sits in the hat set.
        for (std::int64_t a : S.minimal_generators())
            require(a == s || plain.elements[static_cast<std::size_t>(a % s)] == a,
                    "generators inside hat-Apery");

        // Downward closure: members below an Apery element in <=_S stay inside.
        for (std::int64_t w : plain.elements)
            for (std::int64_t y = 1; y < w; ++y)
                if (S.contains(y) && S.contains(w - y))
                    require(plain.elements[static_cast<std::size_t>(y % s)] == y,
                            "Apery downward closure");
    }

    void apery_suite() {
        apery_one(S.multiplicity());
        // Keep sampled elements modest: the minima/maxima checks cost O(s^2).
        std::int64_t hi = std::min(S.conductor() + 2 * S.multiplicity(),
                                   S.multiplicity() + 48);
        for (int k = 0; k < 2; ++k) apery_one(random_member(S.multiplicity(), hi));
    }

    void arf_suite() {
        // Definitional vs sum-free route for every nonzero sporadic element
        // (is_arf_element cross-checks internally).
        bool all_arf = true;
        for (std::int64_t z = 1; z < S.conductor(); ++z) {
            if (!S.contains(z)) continue;
            if (!is_arf_element(S, z)) all_arf = false;
            ++out.checks;
        }
        require(is_arf_semigroup(S) == all_arf, "Arf semigroup = all sporadic Arf");
        if (all_arf) require(is_med(S), "Arf implies MED");

        for (int k = 0; k < 2; ++k)
            require(is_arf_element(S, random_member(S.conductor(),
                                                    S.conductor() + 2 * S.multiplicity())),
                    "z > f(S) is Arf");

        // hat-Ap(S, 2m) always carries a sum: (m, m, 2m) at least.
        std::int64_t m2 = 2 * S.multiplicity();
        AperySet hat2 = apery_set(S, m2, true);
        bool witnessed = false;
        for (std::size_t i = 0; i < hat2.elements.size() && !witnessed; ++i)
            for (std::size_t j = i; j < hat2.elements.size() && !witnessed; ++j) {
                std::int64_t sum = hat2.elements[i] + hat2.elements[j];
                if (sum == m2 ||
                    (sum % m2 != 0 && hat2.elements[static_cast<std::size_t>(sum % m2)] == sum))
                    witnessed = true;
            }
        require(witnessed, "hat-Ap(S,2m) never sum-free");

        // Selmer's genus identity from the Apery set of m.
        AperySet apm = apery_set(S, S.multiplicity(), false);
        std::int64_t ap_sum = std::accumulate(apm.elements.begin(), apm.elements.end(),
                                              std::int64_t{0});
        std::int64_t m = S.multiplicity();
        require(2 * ap_sum == 2 * rec.genus * m + m * (m - 1), "Selmer genus identity");
    }

    void closure_trace_checks(const ClosureReport& sat) {
        for (const SaturationStep& st : sat.trace) {
            require(!st.added.empty(), "trace holds proper steps only");
            NumericalSemigroup T = NumericalSemigroup::from_generators(st.input_generators);
            std::int64_t m = T.multiplicity();
            AperySet hat = apery_set(T, m, true);
            std::vector<std::int64_t> nonmin;
            for (std::int64_t w : hat.elements) {
                for (std::int64_t v : hat.elements) {
                    if (v != w && T.contains(w - v)) {
                        nonmin.push_back(w - m);
                        break;
                    }
                }
            }
            std::sort(nonmin.begin(), nonmin.end());
            require(nonmin == st.added, "additions = non-minimal Apery elements");
            for (std::int64_t a : st.added) require(!T.contains(a), "additions are new");
            for (const WitnessTriple& w : st.witness_triples)
                require(w.left + w.right == w.sum && w.left <= w.right, "witness triple shape");
        }
    }

    void closure_suite() {
        ClosureReport sat = med_closure_saturation(S);
        ClosureReport eff = med_closure_effective(S);
        NumericalSemigroup form = med_closure_formula(S);
        require(sat.result == eff.result, "saturation = effective");
        require(sat.result == form, "saturation = formula");
        try {
            require(med_closure_intersection(S) == form, "intersection oracle agreement");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SearchSpaceTooLarge) throw;
        }

        const NumericalSemigroup& M = sat.result;
        std::int64_t m = S.multiplicity();
        require(is_med(M), "closure is MED");
        require(M.multiplicity() == m, "closure multiplicity preserved");
        require(S.is_subset_of(M), "closure contains input");
        require(med_frobenius(M) == M.minimal_generators().back() - m, "MED Frobenius formula");
        require(med_closure_saturation(M).iterations == 0, "closure idempotent");

        MedGenusDiagnostic diag = med_genus_diagnostic(M);
        require(diag.direct_genus == invariants(M).genus, "MED genus direct count");

        if (m >= 2) {
            AperySet hatm = apery_set(M, m, true);
            std::vector<std::int64_t> hat_sorted = hatm.elements;
            std::sort(hat_sorted.begin(), hat_sorted.end());
            require(hat_sorted == M.minimal_generators(), "hat-Ap(MED,m) = generators");

            AperySet plainm = apery_set(M, m, false);
            std::vector<std::int64_t> expect{0};
            for (std::int64_t a : M.minimal_generators())
                if (a != m) expect.push_back(a);
            std::vector<std::int64_t> plain_sorted = plainm.elements;
            std::sort(plain_sorted.begin(), plain_sorted.end());
            std::sort(expect.begin(), expect.end());
            require(plain_sorted == expect, "Ap(MED,m) = {0} + generators minus m");
        }

        closure_trace_checks(sat);

        for (const EffectiveClassRecord& pc : eff.per_class) {
            require(pc.g_i % m == pc.residue, "g_i residue class");
            require(pc.g_i == pc.c_i - (pc.K_i - 1) * m, "g_i arithmetic");
            require(pc.c_i % m == pc.residue && S.contains(pc.c_i), "c_i admissible");
        }

        // g_i must not depend on the admissible c_i choice.
        ClosureReport shifted = med_closure_effective(S, 17);
        require(shifted.result == M, "effective result c_i independent");
        require(shifted.per_class.size() == eff.per_class.size(), "per-class arity");
        for (std::size_t i = 0; i < eff.per_class.size(); ++i) {
            require(shifted.per_class[i].g_i == eff.per_class[i].g_i, "g_i c_i-independent");
            require(shifted.per_class[i].c_i == eff.per_class[i].c_i + 17 * m, "shifted c_i");
        }

        lemma_ds_suite(M);
        conmed_suite();
        union_suite(M);
        congruent_gap_suite();
        coefficient_suite();
    }

    // Every minimal generator a of MED(S) admits a = sum k_i a_i - (K-1)m with
    // K <= d(S): check the least K over representations of a - m in the r_i.
    void lemma_ds_suite(const NumericalSemigroup& M) {
        if (S.is_full() || S.embedding_dimension() < 2) return;
        const auto& gens = S.minimal_generators();
        std::int64_t m = S.multiplicity();
        Rational d = d_bound(S);
        for (std::int64_t a : M.minimal_generators()) {
            if (a == m) continue;
            std::int64_t target = a - m;
            const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 2;
            std::vector<std::int64_t> fewest(static_cast<std::size_t>(target + 1), inf);
            fewest[0] = 0;
            for (std::int64_t v = 1; v <= target; ++v)
                for (std::size_t j = 1; j < gens.size(); ++j) {
                    std::int64_t r = gens[j] - m;
                    if (r <= v && fewest[static_cast<std::size_t>(v - r)] + 1 <
                                      fewest[static_cast<std::size_t>(v)])
                        fewest[static_cast<std::size_t>(v)] =
                            fewest[static_cast<std::size_t>(v - r)] + 1;
                }
            std::int64_t K = fewest[static_cast<std::size_t>(target)];
            require(K < inf, "lem:ds representation exists");
            require(Rational(K) <= d, "lem:ds K <= d(S)");
        }
    }

    void conmed_suite() {
        std::size_t n = S.minimal_generators().size();
        for (int round = 0; round < 20; ++round) {
            std::vector<std::int64_t> coef(n, 0);
            std::int64_t K = 0;
            while (K < 2) {
                K = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    coef[j] = draw(rng, 0, 3);
                    K += coef[j];
                }
            }
            require(lemma_conmed_check(S, coef), "lem:conmed membership");
        }
    }

    void union_suite(const NumericalSemigroup& M) {
        std::vector<std::int64_t> fresh;
        for (std::int64_t x = 0; x < S.conductor(); ++x)
            if (M.contains(x) && !S.contains(x)) fresh.push_back(x);
        for (int round = 0; round < 3; ++round) {
            std::int64_t u;
            if (!fresh.empty())
                u = fresh[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(fresh.size()) - 1))];
            else
                u = random_member(S.multiplicity(), S.conductor() + S.multiplicity());
            require(closure_union_check(S, u), "lem:union closure stability");
        }
    }

    void congruent_gap_suite() {
        std::int64_t m = S.multiplicity();
        std::vector<std::vector<std::int64_t>> by_class(static_cast<std::size_t>(m));
        for (std::int64_t g : rec.gaps) by_class[static_cast<std::size_t>(g % m)].push_back(g);
        std::vector<const std::vector<std::int64_t>*> rich;
        for (const auto& cls : by_class)
            if (cls.size() >= 2) rich.push_back(&cls);
        if (rich.empty()) return;
        for (int round = 0; round < 3; ++round) {
            const auto& cls = *rich[static_cast<std::size_t>(
                draw(rng, 0, static_cast<std::int64_t>(rich.size()) - 1))];
            std::size_t i = static_cast<std::size_t>(
                draw(rng, 0, static_cast<std::int64_t>(cls.size()) - 2));
            std::size_t j = i + 1 + static_cast<std::size_t>(
                draw(rng, 0, static_cast<std::int64_t>(cls.size()) - 2 - static_cast<std::int64_t>(i)));
            std::int64_t v = cls[i], u = cls[j]; // u > v, u ≡ v (mod m)
            std::vector<std::int64_t> gu = S.minimal_generators(), gv = S.minimal_generators();
            gu.push_back(u);
            gv.push_back(v);
            require(NumericalSemigroup::from_generators(gu).is_subset_of(
                        NumericalSemigroup::from_generators(gv)),
                    "congruent gap inclusion");
        }
    }

    void coefficient_suite() {
        std::int64_t m = S.multiplicity();
        require(max_coefficient_sum(S, 0).total == 0, "K(0) = 0");
        require(max_coefficient_sum(S, m).total == 1, "K(m) = 1");
        const auto& gens = S.minimal_generators();
        std::int64_t a = gens[static_cast<std::size_t>(
            draw(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
        require(max_coefficient_sum(S, a).total == 1, "K(a_i) = 1");
        std::int64_t c0 = random_member(S.conductor(), S.conductor() + 3 * m);
        CoefficientSum rep = max_coefficient_sum(S, c0); // witness asserted inside
        require(rep.total >= 1, "K positive on members");
    }

    void extension_suite() {
        if (rec.type == 0) return; // only the full semigroup
        require(ideal_bound_check(S), "eq (1) sandwich");
        for (std::int64_t r = 1; r <= rec.type; ++r) {
            ExtensionReport er = pf_extension(S, r);
            require(er.genus_drop == r, "genus drop = r");
            require(conductor_bound_check(S, r), "c <= 2g - r + 1");
            require(blv_ideal_conductor_check(S, r), "BLV ideal conductor bound");
            require(er.bound_lhs <= rec.conductor && rec.conductor <= er.bound_rhs,
                    "eq (1) sides");
        }

        // Any non-PF gap must break closure when adjoined alone.
        std::vector<std::int64_t> nonpf;
        for (std::int64_t g : rec.gaps)
            if (!std::binary_search(rec.pseudo_frobenius.begin(), rec.pseudo_frobenius.end(), g))
                nonpf.push_back(g);
        for (int round = 0; round < 3 && !nonpf.empty(); ++round) {
            std::int64_t x = nonpf[static_cast<std::size_t>(
                draw(rng, 0, static_cast<std::int64_t>(nonpf.size()) - 1))];
            bool broken = false;
            for (std::int64_t s = 1; s < S.conductor() && !broken; ++s)
                if (S.contains(s) && !S.contains(x + s) && x + s != x) broken = true;
            require(broken, "non-PF gap breaks closure");
            out.nonpf_closure_break_observed = true;
        }
    }

    BatteryResult run() {
        if (S.is_full()) {
            require(rec.genus == 0 && rec.conductor == 0 && rec.type == 0, "full semigroup");
            require(med_closure_saturation(S).result == S, "full closure fixed point");
            require(med_closure_formula(S) == S, "full formula fixed point");
            require(is_symmetric(S), "full symmetric convention");
            return out;
        }
        core_suite();
        apery_suite();
        arf_suite();
        closure_suite();
        extension_suite();
        return out;
    }
};

} // namespace

BatteryResult check_instance(const NumericalSemigroup& S, std::uint64_t seed) {
    Battery battery(S, seed);
    return battery.run();
}

NumericalSemigroup random_instance(std::mt19937_64& rng, std::int64_t m_max,
                                   std::int64_t gen_max) {
    if (m_max < 2 || gen_max < 3 || m_max >= gen_max)
        throw Error(ErrorCode::ParseError, "need 2 <= m_max < gen_max and gen_max >= 3");
    std::int64_t m = draw(rng, 2, m_max);
    std::int64_t count = draw(rng, 2, std::min<std::int64_t>(m, 8));
    std::vector<std::int64_t> gens{m};
    for (std::int64_t j = 1; j < count; ++j) gens.push_back(draw(rng, m + 1, gen_max));
    std::int64_t g = 0;
    for (std::int64_t a : gens) g = std::gcd(g, a);
    if (g != 1) gens.push_back(m + 1);
    return NumericalSemigroup::from_generators(std::move(gens));
}

std::vector<NumericalSemigroup> enumerate_small(std::int64_t m_max, std::int64_t gen_max) {
    std::vector<NumericalSemigroup> out;
    for (std::int64_t m = 2; m <= m_max; ++m) {
        // One optional generator per nonzero residue class; minimal generating
        // sets never repeat a class.
        std::vector<std::vector<std::int64_t>> options(static_cast<std::size_t>(m));
        for (std::int64_t r = 1; r < m; ++r) {
            options[static_cast<std::size_t>(r)].push_back(0); // class unused
            for (std::int64_t v = m + r; v <= gen_max; v += m)
                options[static_cast<std::size_t>(r)].push_back(v);
        }
        std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
        for (;;) {
            std::vector<std::int64_t> gens{m};
            for (std::int64_t r = 1; r < m; ++r) {
                std::int64_t v = options[static_cast<std::size_t>(r)][pick[static_cast<std::size_t>(r)]];
                if (v != 0) gens.push_back(v);
            }
            std::int64_t g = 0;
            for (std::int64_t a : gens) g = std::gcd(g, a);
            if (gens.size() >= 2 && g == 1) {
                std::sort(gens.begin(), gens.end());
                NumericalSemigroup S = NumericalSemigroup::from_generators(gens);
                if (S.minimal_generators() == gens) out.push_back(std::move(S));
            }
            std::int64_t r = 1;
            while (r < m) {
                std::size_t idx = static_cast<std::size_t>(r);
                if (++pick[idx] < options[idx].size()) break;
                pick[idx] = 0;
                ++r;
            }
            if (r == m) break;
        }
    }
    return out;
}

} // namespace medsg::selftest
