#include <ramsey_lab/arrowing.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdint>

using namespace ramsey_lab;

namespace {

// Exhaustive check over all 2^E colorings, copies given as edge bitmasks.
auto brute_force_arrows(int n, const LooseTemplate & red, const LooseTemplate & blue) -> bool
{
    int k = red.k();
    auto edges = static_cast<int>(binomial(n, k));
    auto masks = [&](const LooseTemplate & t) {
        std::vector<std::uint32_t> out;
        for (const auto & copy : oracle::all_copies(n, t)) {
            std::uint32_t m = 0;
            for (const auto & e : copy)
                m |= 1u << edge_rank(e);
            out.push_back(m);
        }
        return out;
    };
    auto red_masks = masks(red);
    auto blue_masks = masks(blue);
    for (std::uint32_t x = 0; x < (1u << edges); ++x) {
        bool hit = false;
        for (auto m : red_masks)
            if ((x & m) == m) {
                hit = true;
                break;
            }
        if (! hit)
            for (auto m : blue_masks)
                if ((x & m) == 0) {
                    hit = true;
                    break;
                }
        if (! hit)
            return false;
    }
    return true;
}

auto status_of(bool arrows) -> ArrowingStatus { return arrows ? ArrowingStatus::UNSAT : ArrowingStatus::SAT; }

} // namespace

TEST(DecideArrowing, Examples)
{
    auto c3 = cycle_template(3, 3);
    auto six = decide_arrowing(3, 6, c3, c3);
    ASSERT_EQ(six.status, ArrowingStatus::SAT);
    EXPECT_EQ(*six.witness, split_coloring(3, 6, {5}));
    EXPECT_EQ(decide_arrowing(3, 7, c3, c3).status, ArrowingStatus::UNSAT);
    EXPECT_EQ(decide_arrowing(3, 5, c3, c3).status, ArrowingStatus::SAT);
}

TEST(DecideArrowing, SingleEdgeTargets)
{
    auto p1 = path_template(3, 1);
    EXPECT_EQ(decide_arrowing(3, 3, p1, p1).status, ArrowingStatus::UNSAT);
    EXPECT_EQ(decide_arrowing(3, 4, p1, p1).status, ArrowingStatus::UNSAT);
}

TEST(DecideArrowing, RejectsMixedUniformity)
{
    EXPECT_THROW(decide_arrowing(3, 6, cycle_template(3, 3), cycle_template(4, 3)), Error);
}

TEST(DecideArrowing, BruteForceSmall)
{
    for (int n : {4, 5})
        for (auto red : {path_template(3, 1), path_template(3, 2)})
            for (auto blue : {path_template(3, 1), path_template(3, 2)})
                EXPECT_EQ(decide_arrowing(3, n, red, blue).status, status_of(brute_force_arrows(n, red, blue)))
                    << n << " " << red.name() << " " << blue.name();
}

TEST(DecideArrowing, VerdictIndependentOfBranchingOrder)
{
    auto c3 = cycle_template(3, 3);
    auto p2 = path_template(3, 2);
    for (int n = 5; n <= 7; ++n)
        for (const auto & [red, blue] : {std::pair{c3, c3}, std::pair{p2, c3}, std::pair{c3, p2}}) {
            auto base = decide_arrowing(3, n, red, blue).status;
            for (bool reverse : {false, true})
                for (bool blue_first : {false, true}) {
                    ArrowingOptions o;
                    o.reverse_order = reverse;
                    o.blue_first = blue_first;
                    EXPECT_EQ(decide_arrowing(3, n, red, blue, {}, o).status, base);
                }
        }
}

TEST(DecideArrowing, SymmetryPruningIsSound)
{
    ArrowingOptions sym;
    sym.symmetry_pruning = true;
    auto c3 = cycle_template(3, 3);
    auto c4 = cycle_template(3, 4);
    auto p3 = path_template(3, 3);
    for (int n = 6; n <= 9; ++n)
        for (const auto & [red, blue] : {std::pair{c3, c3}, std::pair{p3, p3}, std::pair{c4, c3}})
            if (red.vertex_count() <= n) {
                EXPECT_EQ(decide_arrowing(3, n, red, blue, {}, sym).status, decide_arrowing(3, n, red, blue).status)
                    << n << " " << red.name() << " " << blue.name();
            }
}

TEST(DecideArrowing, ThreadedRunMatchesSingleThreaded)
{
    auto c3 = cycle_template(3, 3);
    auto c4 = cycle_template(3, 4);
    for (int n = 6; n <= 9; ++n) {
        auto single = decide_arrowing(3, n, c4, c3);
        ArrowingOptions o;
        o.threads = 3;
        auto multi = decide_arrowing(3, n, c4, c3, {}, o);
        EXPECT_EQ(multi.status, single.status) << n;
        EXPECT_EQ(multi.witness, single.witness) << n;
    }
    EXPECT_EQ(decide_arrowing(3, 6, c3, c3).witness, decide_arrowing(3, 6, c3, c3, {}, {false, false, false, 4}).witness);
}

TEST(DecideArrowing, NodeBudgetYieldsUnknown)
{
    auto c4 = cycle_template(3, 4);
    auto c3 = cycle_template(3, 3);
    auto v = decide_arrowing(3, 9, c4, c3, {3, 0});
    EXPECT_EQ(v.status, ArrowingStatus::UNKNOWN);
    EXPECT_FALSE(v.witness);
    EXPECT_EQ(v.budget.max_nodes, 3u);
}

TEST(ClauseStore, CopyCountsAndCache)
{
    auto store = build_clauses(3, 6, cycle_template(3, 3), path_template(3, 2));
    EXPECT_EQ(store.variables, 20);
    EXPECT_EQ(store.red_copies.size(), 120u);
    EXPECT_EQ(store.blue_copies.size(), oracle::all_copies(6, path_template(3, 2)).size());
    for (const auto & copy : store.red_copies)
        EXPECT_EQ(copy.size(), 3u);
}

TEST(ClauseStore, DiskCacheRoundTrip)
{
    auto dir = std::filesystem::temp_directory_path() / "ramsey_lab_cache_test";
    std::filesystem::remove_all(dir);
    setenv("RAMSEY_LAB_CACHE", dir.c_str(), 1);
    auto t = path_template(3, 2);
    auto fresh = cached_copies(8, 3, t);
    auto file = dir / "copies_k3_n8_path2.txt";
    EXPECT_TRUE(std::filesystem::exists(file));
    auto loaded = detail::load_cached(file);
    ASSERT_TRUE(loaded);
    EXPECT_EQ(*loaded, fresh);
    EXPECT_EQ(loaded->size(), oracle::all_copies(8, t).size());
    unsetenv("RAMSEY_LAB_CACHE");
    std::filesystem::remove_all(dir);
}
