#include "doctest.h"

#include <vector>

#include "medsg/errors.hpp"
#include "medsg/extension.hpp"
#include "medsg/semigroup.hpp"

using medsg::Error;
using medsg::ErrorCode;
using medsg::NumericalSemigroup;
using I = std::vector<std::int64_t>;

namespace {
NumericalSemigroup sg(const I& gens) { return NumericalSemigroup::from_generators(gens); }
}

TEST_CASE("PF extension of <5,6,7,9>") {
    auto S = sg({5, 6, 7, 9}); // PF = {4, 8}
    auto r1 = medsg::pf_extension(S, 1);
    CHECK(r1.extended == sg({5, 6, 7, 8, 9}));
    CHECK(r1.genus_drop == 1);
    CHECK(medsg::invariants(r1.extended).genus == 4);
    // both sides of the sandwich collapse onto c = 9
    CHECK(r1.bound_lhs == 9);
    CHECK(r1.bound_rhs == 9);
    CHECK(S.conductor() == 9);

    auto r2 = medsg::pf_extension(S, 2);
    CHECK(r2.extended == sg({4, 5, 6, 7}));
    CHECK(r2.genus_drop == 2);
    CHECK(medsg::invariants(r2.extended).genus == 3);
}

TEST_CASE("PF extension of S1 and <2,3>") {
    auto S1 = sg({7, 9, 11, 15}); // PF = {13, 17, 19}
    auto r1 = medsg::pf_extension(S1, 1);
    CHECK(r1.extended == sg({7, 9, 11, 15, 19}));
    auto r3 = medsg::pf_extension(S1, 3);
    CHECK(r3.extended == sg({7, 9, 11, 13, 15, 17, 19}));
    CHECK(medsg::invariants(r3.extended).genus == 9);

    auto tiny = medsg::pf_extension(sg({2, 3}), 1);
    CHECK(tiny.extended.is_full());
    CHECK(tiny.genus_drop == 1);
}

TEST_CASE("extension argument guards") {
    auto S = sg({5, 6, 7, 9});
    for (std::int64_t bad : {std::int64_t{0}, std::int64_t{3}, std::int64_t{-1}}) {
        try {
            (void)medsg::pf_extension(S, bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::RTooLarge);
        }
    }
    try {
        (void)medsg::pf_extension(sg({1}), 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TypeZero);
    }
}

TEST_CASE("bound checks hold across examples") {
    for (const auto& gens : std::vector<I>{{5, 6, 7, 9},
                                           {7, 9, 11, 15},
                                           {2, 3},
                                           {9, 13, 14, 16, 17, 19, 20, 21, 24},
                                           {11, 12, 13, 32, 53}}) {
        auto S = sg(gens);
        auto rec = medsg::invariants(S);
        CHECK(medsg::ideal_bound_check(S));
        for (std::int64_t r = 1; r <= rec.type; ++r) {
            CHECK(medsg::conductor_bound_check(S, r));
            CHECK(medsg::blv_ideal_conductor_check(S, r));
        }
    }
}

TEST_CASE("strict inequality case") {
    auto S1 = sg({7, 9, 11, 15}); // n = 8, t = 3, c = 20, g = 12
    auto er = medsg::pf_extension(S1, 1);
    CHECK(er.bound_lhs == 18);
    CHECK(er.bound_rhs == 22);
    CHECK(er.bound_lhs < S1.conductor());
    CHECK(S1.conductor() < er.bound_rhs);
}
