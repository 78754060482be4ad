#include <ramsey_lab/coloring.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace ramsey_lab;

namespace
{
    // All k-subsets of 1..n sorted colexicographically: compare from the largest element down.
    auto colex_enumeration(int n, int k) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> sets;
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<Vertex> s;
            for (int i = 0; i < n; ++i)
                if (pick[static_cast<std::size_t>(i)])
                    s.push_back(i + 1);
            sets.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
        std::sort(sets.begin(), sets.end(), [](const auto & a, const auto & b) {
            return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
        });
        return sets;
    }
}

TEST(Rank, Examples)
{
    EXPECT_EQ(edge_rank(Edge{1, 2, 3}, 6, 3), 0);
    EXPECT_EQ(edge_rank(Edge{1, 2, 4}, 6, 3), 1);
    EXPECT_EQ(edge_rank(Edge{2, 3, 4}, 6, 3), 3);
}

TEST(Rank, MatchesBruteForceColexEnumeration)
{
    for (int k = 1; k <= 5; ++k)
        for (int n = k; n <= 9; ++n) {
            auto sets = colex_enumeration(n, k);
            ASSERT_EQ(static_cast<Rank>(sets.size()), binomial(n, k));
            for (std::size_t r = 0; r < sets.size(); ++r) {
                Edge e(sets[r]);
                EXPECT_EQ(edge_rank(e, n, k), static_cast<Rank>(r));
                EXPECT_EQ(edge_unrank(static_cast<Rank>(r), k), e);
            }
        }
}

TEST(Rank, IndependentOfHostSize)
{
    Edge e{2, 5, 7};
    EXPECT_EQ(edge_rank(e, 7, 3), edge_rank(e, 30, 3));
}

TEST(Rank, MalformedEdges)
{
    EXPECT_THROW(edge_rank(Edge{1, 2, 9}, 8, 3), Error);
    EXPECT_THROW(edge_rank(Edge{1, 2}, 8, 3), Error);
}

TEST(Split, Examples)
{
    auto c = split_coloring(3, 6, {5});
    EXPECT_EQ(c.count(Color::red), 10);
    EXPECT_EQ(c.count(Color::blue), 10);

    auto d = split_coloring(3, 7, {6});
    EXPECT_TRUE(d.is_red(Edge{3, 4, 5}));
    EXPECT_FALSE(d.is_red(Edge{3, 4, 7}));

    EXPECT_EQ(split_coloring(4, 12, {11}).count(Color::red), 330);
    EXPECT_THROW(split_coloring(3, 5, {6}), Error);
}

TEST(Split, RedClassIsCompleteOnCore)
{
    for (int n = 3; n <= 10; ++n)
        for (int a = 0; a <= n; ++a) {
            auto c = split_coloring(3, n, {a});
            EXPECT_EQ(c.count(Color::red), binomial(a, 3));
            for (Rank r = 0; r < c.edge_count(); ++r)
                EXPECT_EQ(c.is_red_at(r), edge_unrank(r, 3).back() <= a);
        }
}

TEST(Format, HexRoundTripAndLayout)
{
    TwoColoring c(3, 5);
    c.set_at(0, Color::red);
    c.set_at(9, Color::red);
    auto j = coloring_to_json(c);
    EXPECT_EQ(j["encoding"], "colex-bits-hex");
    EXPECT_EQ(j["red_bit"], 1);
    // 10 edges -> 2 bytes; bit 0 of byte 0 and bit 1 of byte 1
    EXPECT_EQ(j["bits"], "0102");
    EXPECT_EQ(coloring_from_json(j), c);
}

TEST(Format, ExplicitFormRoundTrip)
{
    auto c = split_coloring(4, 7, {5});
    auto j = coloring_to_json(c, true);
    EXPECT_EQ(j["red_edges"].size(), 5u);
    EXPECT_EQ(coloring_from_json(j), c);
    EXPECT_EQ(coloring_from_json(coloring_to_json(c)), c);
}

TEST(Format, RejectsBadDocuments)
{
    nlohmann::json j = {{"k", 3}, {"n_vertices", 5}, {"bits", "01"}};
    EXPECT_THROW(coloring_from_json(j), Error);
    nlohmann::json missing = {{"k", 3}};
    EXPECT_THROW(coloring_from_json(missing), Error);
}
