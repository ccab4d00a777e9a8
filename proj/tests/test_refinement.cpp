#include <algorithm>
#include <set>

#include "doctest.h"
#include "robinson/mmodules.hpp"
#include "robinson/refinement.hpp"
#include "robinson/testkit.hpp"
#include "running_example.hpp"

using namespace robinson;

namespace {

OrderedPartition normalized(OrderedPartition blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    return blocks;
}

OrderedPartition expected_blocks(std::initializer_list<std::initializer_list<int>> one_based) {
    OrderedPartition out;
    for (auto block : one_based) {
        std::vector<PointId> b;
        for (int v : block) b.push_back(v - 1);
        std::sort(b.begin(), b.end());
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<PointId> all_but(const DissimilaritySpace& space, PointId p) {
    std::vector<PointId> rest;
    for (PointId x = 0; x < space.size(); ++x)
        if (x != p) rest.push_back(x);
    return rest;
}

}  // namespace

TEST_SUITE_BEGIN("refinement");

TEST_CASE("refine buckets the running example by distance to point 1") {
    const auto space = testdata::example19();
    const auto blocks = normalized(refine(space, 0, all_but(space, 0)));
    CHECK(blocks == expected_blocks({{9, 17}, {6, 10}, {3, 4, 7, 8, 11, 13, 14, 16, 18},
                                     {2, 5, 12, 15, 19}}));
}

TEST_CASE("refine with pivot 2 keeps 14 next to 11 and 13") {
    // d(2,14) = 5 puts 14 in the first bucket together with 11 and 13.
    const auto space = testdata::example19();
    const auto blocks = normalized(refine(space, 1, testdata::ids({3, 4, 7, 8, 11, 13, 14, 16, 18})));
    CHECK(blocks == expected_blocks({{11, 13, 14}, {3, 4, 8, 16, 18}, {7}}));
    CHECK(space(1, blocks[0].front()) == 5);
    CHECK(space(1, blocks[1].front()) == 8);
    CHECK(space(1, blocks[2].front()) == 11);
}

TEST_CASE("refine edge cases") {
    const auto space = testdata::example19();
    CHECK(refine(space, 3, {7}) == OrderedPartition{{7}});
    CHECK(refine(space, 3, {}).empty());
    CHECK_THROWS_AS(refine(space, 3, {3, 7}), PivotInSetError);
}

TEST_CASE("refine output partitions S with the bucket laws") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 10);
        const auto space = testkit::generate(
            {testkit::GeneratorKind::Perturbed, n, seed, 4, false, 3});
        const PointId q = static_cast<PointId>(seed % static_cast<std::uint64_t>(n));
        const auto s = all_but(space, q);
        const auto blocks = refine(space, q, s);
        std::size_t total = 0;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            total += blocks[j].size();
            for (PointId x : blocks[j]) CHECK(space(q, x) == space(q, blocks[j].front()));
            if (j) CHECK(space(q, blocks[j].front()) > space(q, blocks[j - 1].front()));
        }
        CHECK(total == s.size());
    }
}

TEST_CASE("recursive refinement reproduces the ordered copoint partition at 1") {
    const auto space = testdata::example19();
    const auto decomposition = copoint_partition(space, 0);
    CHECK(decomposition.p == 0);
    CHECK(decomposition.copoints ==
          expected_blocks({{17}, {9}, {10}, {6}, {3, 4, 8, 16, 18}, {11, 13, 14}, {7},
                           {2, 5, 12, 15, 19}}));
}

TEST_CASE("recursive refinement base cases") {
    const auto space = testdata::example19();
    CHECK(recursive_refine(space, 0, {}, testdata::ids({3, 4, 8}), {}) ==
          OrderedPartition{testdata::ids({3, 4, 8})});
    const auto one = DissimilaritySpace::validate({{0}});
    CHECK(copoint_partition(one, 0).copoints.empty());
}

TEST_CASE("out-pivot sub-call reverses the near prefix") {
    // Within the run at p=1: In exhausted, S = {3,4,7,8,11,13,14,16,18},
    // Out = {2,5,12,15,19}. Pivot 2 buckets S at distances 5,8,11 while
    // d(1,2) = 10, so the two near buckets swap.
    const auto space = testdata::example19();
    const auto blocks = normalized(recursive_refine(
        space, 0, {}, testdata::ids({3, 4, 7, 8, 11, 13, 14, 16, 18}),
        testdata::ids({2, 5, 12, 15, 19})));
    CHECK(blocks == expected_blocks({{3, 4, 8, 16, 18}, {11, 13, 14}, {7}}));
}

TEST_CASE("a conical space has a cotrivial copoint partition") {
    const int n = 6;
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n),
                                         std::vector<Value>(static_cast<std::size_t>(n), 1));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    const auto space = DissimilaritySpace::validate(rows);
    const auto decomposition = copoint_partition(space, 0);
    CHECK(decomposition.copoints.size() == 1);
    CHECK(decomposition.copoints[0] == all_but(space, 0));
}

TEST_CASE("copoint blocks are mmodules and partition X, Robinson or not") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        const auto space = testkit::generate(
            {testkit::GeneratorKind::Perturbed, n, seed, 3, false, 3});
        const PointId p = static_cast<PointId>(seed % static_cast<std::uint64_t>(n));
        const auto decomposition = copoint_partition(space, p);
        std::set<PointId> covered{p};
        for (const auto& block : decomposition.copoints) {
            CAPTURE(seed);
            CHECK(is_mmodule(space, block));
            for (PointId x : block) CHECK(covered.insert(x).second);
        }
        CHECK(covered.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("copoints are maximal mmodules avoiding p") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 3 + static_cast<int>(seed % 6);
        const auto space = testkit::generate(
            {testkit::GeneratorKind::Toeplitz, n, seed, 2, true, 0});
        const PointId p = 0;
        const auto decomposition = copoint_partition(space, p);
        const auto family = testkit::enumerate_mmodules(space);
        for (const auto& block : decomposition.copoints) {
            for (const auto& m : family) {
                if (m.size() <= block.size()) continue;
                if (std::find(m.begin(), m.end(), p) != m.end()) continue;
                // No strictly larger mmodule avoiding p may contain the block.
                CAPTURE(seed);
                CHECK_FALSE(std::includes(m.begin(), m.end(), block.begin(), block.end()));
            }
        }
    }
}

TEST_CASE("block order extends to a proximity order of some compatible order") {
    // (PO1)/(PO2): some linear extension of the block order lists points by
    // nondecreasing distance from p such that every prefix beyond p is an
    // interval of the compatible order or of its reverse.
    auto prefixes_are_intervals = [](const Ordering& prox, const Ordering& compatible,
                                     PointId p) {
        std::vector<int> pos(compatible.size());
        for (std::size_t i = 0; i < compatible.size(); ++i)
            pos[static_cast<std::size_t>(compatible[i])] = static_cast<int>(i);
        int lo = pos[static_cast<std::size_t>(p)], hi = lo;
        for (PointId x : prox) {
            const int q = pos[static_cast<std::size_t>(x)];
            if (q == lo - 1)
                lo = q;
            else if (q == hi + 1)
                hi = q;
            else
                return false;
        }
        return true;
    };
    int robinson_seen = 0;
    for (std::uint64_t seed = 0; seed < 150 || robinson_seen < 40; ++seed) {
        REQUIRE(seed < 3000);
        const int n = 3 + static_cast<int>(seed % 5);
        const auto space = testkit::generate(
            {testkit::GeneratorKind::Perturbed, n, seed, 3, false, 1});
        const auto oracle = testkit::brute_force_compatible_order(space);
        if (!oracle) continue;
        ++robinson_seen;
        const PointId p = 0;
        const auto blocks = copoint_partition(space, p).copoints;
        // All linear extensions: permutations within blocks, blocks in order.
        std::vector<Ordering> extensions{{}};
        for (const auto& block : blocks) {
            std::vector<PointId> perm = block;
            std::vector<Ordering> grown;
            do {
                for (const auto& e : extensions) {
                    Ordering g = e;
                    g.insert(g.end(), perm.begin(), perm.end());
                    grown.push_back(std::move(g));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            extensions = std::move(grown);
        }
        const Ordering reversed(oracle->rbegin(), oracle->rend());
        bool found = false;
        for (const auto& prox : extensions) {
            bool po1 = true;
            for (std::size_t i = 1; i < prox.size(); ++i)
                if (space(p, prox[i - 1]) > space(p, prox[i])) po1 = false;
            if (!po1) continue;
            if (prefixes_are_intervals(prox, *oracle, p) ||
                prefixes_are_intervals(prox, reversed, p)) {
                found = true;
                break;
            }
        }
        CAPTURE(seed);
        CHECK(found);
    }
}

TEST_CASE("work outside refine stays within the partition bound") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 40);
        const auto space = testkit::generate(
            {testkit::GeneratorKind::ShuffledRobinson, n, seed, 2, false, 0});
        RefinementStats stats;
        const auto blocks = copoint_partition(space, 0, &stats).copoints;
        long long bound = static_cast<long long>(n - 1) * (n - 1);
        for (const auto& b : blocks)
            bound -= static_cast<long long>(b.size()) * static_cast<long long>(b.size());
        CAPTURE(seed);
        CAPTURE(n);
        CHECK(stats.outside_steps <= 25 * bound + 8 * n + 32);
    }
}

TEST_SUITE_END();
