#include <ramsey_lab/witness.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ramsey_lab;

TEST(LowerBoundWitness, Examples)
{
    auto cc = lower_bound_witness(3, 3, 3, PairKind::CC);
    EXPECT_EQ(cc.n_vertices, 6);
    EXPECT_EQ(cc.core_size, 5);
    EXPECT_EQ(cc.coloring, split_coloring(3, 6, {5}));

    auto pp = lower_bound_witness(3, 3, 3, PairKind::PP);
    EXPECT_EQ(pp.n_vertices, 7);
    EXPECT_EQ(pp.core_size, 6);

    auto k4 = lower_bound_witness(4, 3, 3, PairKind::CC);
    EXPECT_EQ(k4.n_vertices, 9);
    EXPECT_EQ(k4.core_size, 8);
}

TEST(LowerBoundWitness, RejectsBadParameters)
{
    EXPECT_THROW(lower_bound_witness(2, 3, 3, PairKind::CC), Error);
    EXPECT_THROW(lower_bound_witness(3, 3, 4, PairKind::PC), Error);
    EXPECT_THROW(lower_bound_witness(3, 3, 2, PairKind::CC), Error);
    EXPECT_NO_THROW(lower_bound_witness(3, 3, 2, PairKind::PP));
    EXPECT_THROW(parse_pair_kind("CP"), Error);
}

TEST(LowerBoundWitness, ConjecturedValues)
{
    EXPECT_EQ(conjectured_value(3, 3, 3, PairKind::CC), 7);
    EXPECT_EQ(conjectured_value(3, 3, 3, PairKind::PP), 8);
    EXPECT_EQ(conjectured_value(3, 4, 3, PairKind::CC), 9);
    EXPECT_EQ(conjectured_value(4, 5, 3, PairKind::CC), 16);
    EXPECT_EQ(conjectured_value(4, 6, 3, PairKind::PC), 20);
}

// Small hosts checked against the brute-force copy oracle.
TEST(LowerBoundWitness, AgreesWithBruteForce)
{
    for (auto pair : {PairKind::PP, PairKind::PC, PairKind::CC})
        for (int n = 3; n <= 4; ++n)
            for (int m = 3; m <= n; ++m) {
                auto w = lower_bound_witness(3, n, m, pair);
                if (w.n_vertices > 7)
                    continue;
                auto [red, blue] = pair_targets(3, n, m, pair);
                EXPECT_FALSE(oracle::has_mono_copy(w.coloring, Color::red, oracle::all_copies(w.n_vertices, red)));
                EXPECT_FALSE(oracle::has_mono_copy(w.coloring, Color::blue, oracle::all_copies(w.n_vertices, blue)));
            }
}

// Every blue edge meets B and a loose structure puts each vertex in at most
// two edges, so a blue path of length l touches at least ceil(l/2) B-vertices.
TEST(LowerBoundWitness, BluePathsUseManyOutsideVertices)
{
    for (int k : {3, 4})
        for (int len = 1; len <= 3; ++len) {
            int host = (k - 1) * 2 + 3;
            int a = host - 3;
            auto c = split_coloring(k, host, {a});
            auto t = LooseTemplate::path(k, len);
            if (t.vertex_count() > host)
                continue;
            int seen = 0;
            for_each_embedding(c, ColorClaim::blue, t, [&](const Embedding & e) {
                int outside = 0;
                for (auto v : e.assignment)
                    outside += v > a;
                EXPECT_GE(outside, (len + 1) / 2);
                return ++seen < 2000;
            });
            EXPECT_GT(seen, 0);
        }
}
