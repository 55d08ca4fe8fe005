#include "doctest.h"

#include <algorithm>
#include <vector>

#include "medsg/apery.hpp"
#include "medsg/errors.hpp"
#include "medsg/semigroup.hpp"
#include "oracles.hpp"

using medsg::Error;
using medsg::ErrorCode;
using medsg::NumericalSemigroup;
using I = std::vector<std::int64_t>;

namespace {
I sorted(I v) {
    std::sort(v.begin(), v.end());
    return v;
}
} // namespace

TEST_CASE("Apery sets of S1 as printed") {
    auto S = NumericalSemigroup::from_generators({7, 9, 11, 15});
    auto ap7 = medsg::apery_set(S, 7);
    CHECK(ap7.elements == I{0, 15, 9, 24, 11, 26, 20}); // residue order
    CHECK(sorted(ap7.elements) == I{0, 9, 11, 15, 20, 24, 26});
    auto ap15 = medsg::apery_set(S, 15);
    CHECK(sorted(ap15.elements) ==
          I{0, 7, 9, 11, 14, 16, 18, 20, 21, 23, 25, 27, 28, 32, 34});
    for (std::size_t i = 0; i < ap15.elements.size(); ++i)
        CHECK(ap15.elements[i] % 15 == static_cast<std::int64_t>(i));

    auto hat7 = medsg::apery_set(S, 7, true);
    CHECK(hat7.elements == I{7, 15, 9, 24, 11, 26, 20});
}

TEST_CASE("Apery sets of S2 and S3 as printed") {
    auto S2 = NumericalSemigroup::from_generators({9, 13, 14, 16, 17, 19, 20, 21, 24});
    CHECK(sorted(medsg::apery_set(S2, 13).elements) ==
          I{0, 9, 14, 16, 17, 18, 19, 20, 21, 23, 24, 25, 28});
    CHECK(sorted(medsg::apery_set(S2, 9).elements) ==
          I{0, 13, 14, 16, 17, 19, 20, 21, 24});

    auto S3 = NumericalSemigroup::from_generators({7, 11, 13, 15, 16, 17, 19});
    CHECK(sorted(medsg::apery_set(S3, 7).elements) == I{0, 11, 13, 15, 16, 17, 19});
    CHECK(sorted(medsg::apery_set(S3, 11).elements) ==
          I{0, 7, 13, 14, 15, 16, 17, 19, 20, 21, 23});
}

TEST_CASE("hat variants from the worked closure examples") {
    auto S5 = NumericalSemigroup::from_generators({4, 7, 17});
    CHECK(medsg::apery_set(S5, 4, true).elements == I{4, 17, 14, 7});

    auto S6 = NumericalSemigroup::from_generators({11, 12, 13, 32, 53});
    CHECK(medsg::apery_set(S6, 11, true).elements ==
          I{11, 12, 13, 25, 26, 38, 39, 51, 52, 53, 32});

    CHECK(medsg::apery_set(NumericalSemigroup::from_generators({2, 3}), 2).elements ==
          I{0, 3});
}

TEST_CASE("minima recover the generators, maxima recover PF") {
    auto S1 = NumericalSemigroup::from_generators({7, 9, 11, 15});
    for (std::int64_t s : {7, 9, 15, 21}) {
        CHECK(medsg::apery_minima(S1, s) == I{7, 9, 11, 15});
        CHECK(medsg::apery_maxima_pf(S1, s) == I{13, 17, 19});
    }
    auto S6 = NumericalSemigroup::from_generators({11, 12, 13, 32, 53});
    CHECK(medsg::apery_maxima_pf(S6, 11) == I{21, 40, 41, 42});
    CHECK(medsg::apery_maxima_pf(S6, 24) == I{21, 40, 41, 42});

    auto full = NumericalSemigroup::from_generators({1});
    CHECK(medsg::apery_set(full, 5).elements == I{0, 1, 2, 3, 4});
    CHECK(medsg::apery_minima(full, 5) == I{1});
    CHECK(medsg::apery_maxima_pf(full, 5).empty());
}

TEST_CASE("apery_set agrees with the x - s characterization") {
    const std::vector<I> cases = {{7, 9, 11, 15}, {4, 7, 17}, {5, 6, 7, 9}, {2, 33}};
    for (const auto& gens : cases) {
        auto S = NumericalSemigroup::from_generators(gens);
        for (std::int64_t s : I{S.multiplicity(), S.minimal_generators().back(),
                                S.conductor() + S.multiplicity()}) {
            if (!S.contains(s) || s == 0) continue;
            auto ap = medsg::apery_set(S, s);
            CHECK(static_cast<std::int64_t>(ap.elements.size()) == s);
            CHECK(sorted(ap.elements) == oracles::apery_sorted(S, s));
        }
    }
}

TEST_CASE("Apery errors and the <=_S order") {
    auto S = NumericalSemigroup::from_generators({7, 9, 11, 15});
    CHECK_THROWS_AS((void)medsg::apery_set(S, 0), Error);
    try {
        (void)medsg::apery_set(S, 8);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInSemigroup);
    }
    CHECK(medsg::leq_s(S, 9, 24));
    CHECK_FALSE(medsg::leq_s(S, 15, 20));
    CHECK(medsg::leq_s(S, 0, 7));

    CHECK(medsg::minimal_generators_via_sums(S) == I{7, 9, 11, 15});
    auto S2 = NumericalSemigroup::from_generators({9, 13, 14, 16, 17, 19, 20, 21, 24});
    CHECK(medsg::minimal_generators_via_sums(S2) == S2.minimal_generators());
}
