#include <algorithm>

#include "doctest.h"
#include "robinson/conical.hpp"
#include "robinson/recognizer.hpp"
#include "robinson/testkit.hpp"
#include "running_example.hpp"

using namespace robinson;

TEST_SUITE_BEGIN("conical");

TEST_CASE("classification of the running example's copoints") {
    const auto space = testdata::example19();
    CHECK(classify_copoint(space, 0, testdata::ids({11, 13, 14})) == CopointClass::NonSeparable);
    CHECK(classify_copoint(space, 1, testdata::ids({5, 12, 19})) == CopointClass::Separable);
    // diam {13,14} = 1 = d(11,13): tight within the copoint {11,13,14}.
    CHECK(classify_copoint(space, 10, testdata::ids({13, 14})) == CopointClass::Tight);
    CHECK(classify_copoint(space, 0, testdata::ids({7})) == CopointClass::NonSeparable);
    CHECK_THROWS_AS(classify_copoint(space, 0, testdata::ids({9, 10})), NotEquidistantError);
}

TEST_CASE("separation splits {19,5,12} at the admissible hole") {
    const auto space = testdata::example19();
    const auto pieces = separate_if_separable(space, 1, testdata::ids({19, 5, 12}));
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].rep == 18);
    CHECK(pieces[0].members == testdata::ids({19, 5}));
    CHECK(pieces[1].rep == 11);
    CHECK(pieces[1].members == testdata::ids({12}));
}

TEST_CASE("non-separable copoints stay whole") {
    const auto space = testdata::example19();
    const auto pieces = separate_if_separable(space, 0, testdata::ids({13, 14, 11}));
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].rep == 12);
    CHECK(pieces[0].members == testdata::ids({13, 14, 11}));

    const auto single = separate_if_separable(space, 0, testdata::ids({7}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].rep == 6);
}

TEST_CASE("the scan reports a missing hole instead of succeeding") {
    // delta = 2 but the extremes sit at distance 3 with both internal holes
    // narrower than delta, so no hole satisfies d(y,z) >= delta.
    const auto space = DissimilaritySpace::validate({{0, 2, 2, 2},
                                                     {2, 0, 1, 3},
                                                     {2, 1, 0, 1},
                                                     {2, 3, 1, 0}});
    CHECK_THROWS_AS(separate_if_separable(space, 0, {1, 2, 3}), NoAdmissibleHoleError);
    try {
        separate_if_separable(space, 0, {1, 2, 3});
        FAIL("expected NoAdmissibleHoleError");
    } catch (const NoAdmissibleHoleError& e) {
        CHECK(e.apex == 0);
        CHECK(e.copoint == std::vector<PointId>{1, 2, 3});
    }
}

TEST_CASE("admissible holes on the running example") {
    const auto space = testdata::example19();
    SUBCASE("block [19,5,12] at p=2 has exactly the internal hole (5,12)") {
        const auto holes = admissible_holes(space, 1, testdata::ids({19, 5, 12}));
        CHECK(holes.internal == std::vector<std::size_t>{1});
        CHECK_FALSE(holes.wrap);
    }
    SUBCASE("conical subspace accepts the wrap hole when diam == delta") {
        // {1,6,9,10} with apex 7: delta = 9 equals the diameter.
        const auto sub = restrict_space(space, testdata::ids({7, 1, 6, 9, 10}));
        const auto sub_order = testkit::brute_force_compatible_order(
            restrict_space(space, testdata::ids({1, 6, 9, 10})).space);
        REQUIRE(sub_order.has_value());
        std::vector<PointId> block;
        const auto original = testdata::ids({1, 6, 9, 10});
        for (PointId local : *sub_order) block.push_back(original[static_cast<std::size_t>(local)]);
        const auto holes = admissible_holes(space, 6, block);
        CHECK(holes.wrap);
    }
    SUBCASE("two-point block at distance delta accepts every hole") {
        // d(13,14) = 1 and d(11,13) = d(11,14) = 1.
        const auto holes = admissible_holes(space, 10, testdata::ids({13, 14}));
        CHECK(holes.wrap);
        CHECK(holes.internal == std::vector<std::size_t>{0});
    }
}

TEST_CASE("separation properties on generated conical inputs") {
    int separable_seen = 0;
    for (std::uint64_t seed = 0; seed < 400 || separable_seen < 25; ++seed) {
        REQUIRE(seed < 6000);
        const int n = 3 + static_cast<int>(seed % 6);
        const auto space =
            testkit::generate({testkit::GeneratorKind::Perturbed, n, seed, 4, false, 1});
        const auto oracle = testkit::brute_force_compatible_order(space);
        if (!oracle) continue;
        for (PointId p = 0; p < space.size(); ++p) {
            for (const auto& copoint : copoint_partition(space, p).copoints) {
                // Compatible order of the copoint induced by the oracle order.
                std::vector<PointId> sorted;
                for (PointId x : *oracle)
                    if (std::find(copoint.begin(), copoint.end(), x) != copoint.end())
                        sorted.push_back(x);
                const Value delta = space(p, sorted.front());
                const auto pieces = separate_if_separable(space, p, sorted);
                if (pieces.size() == 1) {
                    CHECK(pieces[0].members == sorted);
                    CHECK(pieces[0].rep == sorted.front());
                } else {
                    ++separable_seen;
                    CHECK(classify_copoint(space, p, copoint) == CopointClass::Separable);
                    // Lemma-level separation laws.
                    CHECK(diameter(space, pieces[0].members) <= delta);
                    CHECK(diameter(space, pieces[1].members) <= delta);
                    for (PointId a : pieces[0].members)
                        for (PointId b : pieces[1].members) CHECK(space(a, b) >= delta);
                    // The pieces keep the induced order and extreme representatives.
                    std::vector<PointId> glued = pieces[0].members;
                    glued.insert(glued.end(), pieces[1].members.begin(), pieces[1].members.end());
                    CHECK(glued == sorted);
                    CHECK(pieces[0].rep == pieces[0].members.front());
                    CHECK(pieces[1].rep == pieces[1].members.back());
                }
                // Inserting p into the chosen hole stays compatible.
                const auto sub = restrict_space(space, [&] {
                    std::vector<PointId> m = sorted;
                    m.push_back(p);
                    return m;
                }());
                Ordering with_p;
                for (std::size_t i = 0; i < pieces[0].members.size(); ++i)
                    with_p.push_back(static_cast<PointId>(i));
                with_p.push_back(static_cast<PointId>(sorted.size()));  // local id of p
                for (std::size_t i = pieces[0].members.size(); i < sorted.size(); ++i)
                    with_p.push_back(static_cast<PointId>(i));
                CAPTURE(seed);
                CHECK(is_robinson_order(sub.space, with_p));
            }
        }
    }
}

TEST_SUITE_END();
