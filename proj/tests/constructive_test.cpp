#include <ramsey_lab/constructive.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

using namespace ramsey_lab;

namespace {

auto iota_vertices(Vertex from, int count) -> std::vector<Vertex>
{
    std::vector<Vertex> vs(static_cast<std::size_t>(count));
    std::iota(vs.begin(), vs.end(), from);
    return vs;
}

auto path_on(int n, Vertex from = 1) -> Embedding
{
    return {LooseTemplate::path(3, n), iota_vertices(from, 2 * n + 1), ColorClaim::red};
}

auto cycle_on(int k, int n, Vertex from = 1, ColorClaim claim = ColorClaim::red) -> Embedding
{
    return {LooseTemplate::cycle(k, n), iota_vertices(from, n * (k - 1)), claim};
}

void paint(TwoColoring & c, const Embedding & e, Color color)
{
    for (const auto & edge : e.host_edges())
        c.set(edge, color);
}

auto all_blue(int k, int n) -> TwoColoring
{
    TwoColoring c(k, n);
    for (Rank r = 0; r < c.edge_count(); ++r)
        c.set_at(r, Color::blue);
    return c;
}

auto all_red(int k, int n) -> TwoColoring
{
    TwoColoring c(k, n);
    for (Rank r = 0; r < c.edge_count(); ++r)
        c.set_at(r, Color::red);
    return c;
}

auto has_copy(const TwoColoring & c, Color color, const LooseTemplate & t) -> bool
{
    return search_embedding(c, color, t).status == SearchStatus::found;
}

/// All blue except the red edges of `red` and up to `flips` random edges
/// turned red.
auto sparse_red(int k, int n, const Embedding & red, int flips, std::mt19937_64 & rng) -> TwoColoring
{
    auto c = all_blue(k, n);
    paint(c, red, Color::red);
    std::uniform_int_distribution<Rank> pick(0, c.edge_count() - 1);
    int count = static_cast<int>(rng() % static_cast<unsigned>(flips + 1));
    for (int j = 0; j < count; ++j)
        c.set_at(pick(rng), Color::red);
    return c;
}

/// Random coloring with P red and W placed after it, conditioned on P being
/// maximal with respect to W.
auto maximal_path_instance(int n, int w_size, std::mt19937_64 & rng) -> TwoColoring
{
    auto p = path_on(n);
    while (true) {
        auto c = sparse_red(3, 2 * n + 1 + w_size, p, 4 * n, rng);
        if (is_maximal_wrt(c, {p, iota_vertices(2 * n + 2, w_size)}))
            return c;
    }
}

auto blue_cycle_edges(const Embedding & e) -> std::vector<Edge> { return e.host_edges(); }

} // namespace

TEST(GoodConfiguration, FinalCaseOfTheArgument)
{
    // n = 4, i = 1, u = p_1, W = {10, 11, 12}
    auto p = path_on(4);
    std::vector<Vertex> w{10, 11, 12};
    auto c = all_blue(3, 12);
    paint(c, p, Color::red);
    for (auto y : w) {
        c.set(Edge{1, 3, y}, Color::red);
        c.set(Edge{2, 3, y}, Color::red);
        c.set(Edge{1, 4, y}, Color::red);
        c.set(Edge{2, 4, y}, Color::red);
    }
    auto g = find_good_configuration(c, p, w, 1, 1);
    EXPECT_EQ(g.branch, 4);
    EXPECT_EQ(g.avoided_vertex, 4);
    EXPECT_TRUE(g.first_edge().contains(1));
    EXPECT_TRUE(g.first_edge().contains(2));
    EXPECT_EQ(g.a2, 2);
    EXPECT_TRUE(g.second_edge().contains(5));
    EXPECT_NE(g.x, g.y);
    EXPECT_TRUE(validate_configuration(c, p, w, 1, g).ok);
}

TEST(GoodConfiguration, NeedsThreeOutsideVertices)
{
    auto p = path_on(3);
    auto c = all_blue(3, 9);
    paint(c, p, Color::red);
    try {
        find_good_configuration(c, p, {8, 9}, 1, 1);
        FAIL() << "expected a hypothesis violation";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::hypothesis_violation);
    }
}

TEST(GoodConfiguration, RejectsNonMaximalPath)
{
    auto p = path_on(2);
    auto c = all_red(3, 8);
    EXPECT_THROW(find_good_configuration(c, p, {6, 7, 8}, 1, 1), Error);
}

TEST(GoodConfiguration, RandomizedInstancesValidate)
{
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 4;
        auto c = maximal_path_instance(n, 3, rng);
        auto p = path_on(n);
        auto w = iota_vertices(2 * n + 2, 3);
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        Vertex u = i == 1 ? p.image(1) : p.image(2 * i - 2 + static_cast<int>(rng() % 2));
        auto g = find_good_configuration(c, p, w, i, u);
        auto v = validate_configuration(c, p, w, u, g);
        ASSERT_TRUE(v.ok) << "trial " << trial << ": " << v.reason;
        EXPECT_FALSE(detail::contains(g.support(), g.avoided_vertex));
    }
}

TEST(AbsorbBluePath, TwoEdgePath)
{
    std::mt19937_64 rng(7);
    auto c = maximal_path_instance(2, 3, rng);
    auto p = path_on(2);
    auto w = iota_vertices(6, 3);
    auto a = absorb_blue_path(c, p, w);
    EXPECT_EQ(a.q.shape.length(), 2);
    EXPECT_EQ(a.w_used.size(), 2U);
    EXPECT_EQ(a.r, 0);
    EXPECT_TRUE(validate_absorption(c, p, w, a).ok);
}

TEST(AbsorbBluePath, NeedsThreeOutsideVertices)
{
    auto p = path_on(2);
    auto c = all_blue(3, 7);
    paint(c, p, Color::red);
    EXPECT_THROW(absorb_blue_path(c, p, {6, 7}), Error);
}

TEST(AbsorbBluePath, RandomizedInvariants)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = trial % 2 == 0 ? 4 : 6;
        int ws = 4 + (trial / 2) % 2;
        auto c = maximal_path_instance(n, ws, rng);
        auto p = path_on(n);
        auto w = iota_vertices(2 * n + 2, ws);
        auto a = absorb_blue_path(c, p, w);
        int q = a.q.shape.length();
        EXPECT_EQ(q, 2 * (static_cast<int>(a.w_used.size()) - 1));
        EXPECT_EQ(q, n - a.r);
        auto v = validate_absorption(c, p, w, a);
        ASSERT_TRUE(v.ok) << "trial " << trial << ": " << v.reason;
    }
}

TEST(Case2BlueCycle, Formulas)
{
    // red C_4 on v_1..v_8, W = x_1, x_2, x_3 = 9, 10, 11
    auto cyc = cycle_on(3, 4);
    auto c = all_blue(3, 11);
    paint(c, cyc, Color::red);
    std::vector<Vertex> w{9, 10, 11};

    auto m4 = case2_blue_cycle(c, cyc, w, 4);
    EXPECT_EQ(blue_cycle_edges(m4), (std::vector<Edge>{{9, 2, 3}, {3, 4, 10}, {10, 5, 6}, {9, 6, 7}}));
    auto m3 = case2_blue_cycle(c, cyc, w, 3);
    EXPECT_EQ(blue_cycle_edges(m3), (std::vector<Edge>{{9, 2, 3}, {3, 4, 10}, {10, 1, 2}}));
    auto m5 = case2_blue_cycle(c, cyc, w, 5);
    EXPECT_EQ(blue_cycle_edges(m5), (std::vector<Edge>{{9, 2, 3}, {3, 4, 10}, {10, 5, 6}, {6, 7, 11}, {11, 1, 2}}));
    for (const auto * e : {&m3, &m4, &m5})
        EXPECT_TRUE(verify_embedding(c, *e).ok);
}

TEST(Case2BlueCycle, RejectsRedHypothesisEdge)
{
    auto cyc = cycle_on(3, 4);
    auto c = all_blue(3, 11);
    paint(c, cyc, Color::red);
    c.set(Edge{5, 6, 11}, Color::red);
    try {
        case2_blue_cycle(c, cyc, {9, 10, 11}, 4);
        FAIL() << "expected a hypothesis violation";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::hypothesis_violation);
    }
}

TEST(Case2BlueCycle, IgnoresEdgesOutsideTheHypothesis)
{
    auto cyc = cycle_on(3, 4);
    auto base = all_blue(3, 11);
    paint(base, cyc, Color::red);
    std::vector<Vertex> w{9, 10, 11};
    auto reference = case2_blue_cycle(base, cyc, w, 5);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto c = oracle::random_coloring(3, 11, 0.5, rng);
        paint(c, cyc, Color::red);
        for (int i = 1; i <= 4; ++i)
            for (auto z : w) {
                c.set(Edge{cyc.image(2 * i - 1), cyc.image(2 * i), z}, Color::blue);
                c.set(Edge{cyc.image(2 * i), cyc.image(2 * i % 8 + 1), z}, Color::blue);
            }
        EXPECT_EQ(case2_blue_cycle(c, cyc, w, 5).assignment, reference.assignment);
    }
}

TEST(BlueCycleFromRedShorterCycle, CaseTwoColoring)
{
    auto cyc = cycle_on(3, 4);
    auto c = all_blue(3, 11);
    paint(c, cyc, Color::red);
    auto r = blue_cycle_from_red_shorter_cycle(c, cyc, 5, 3);
    EXPECT_EQ(r.route, "case-2");
    EXPECT_EQ(r.cycle.assignment, case2_blue_cycle(c, cyc, {9, 10, 11}, 3).assignment);
    EXPECT_TRUE(verify_embedding(c, r.cycle).ok);
}

TEST(BlueCycleFromRedShorterCycle, ExcludedPairs)
{
    auto cyc = cycle_on(3, 3);
    auto c = all_blue(3, 9);
    paint(c, cyc, Color::red);
    try {
        blue_cycle_from_red_shorter_cycle(c, cyc, 4, 3);
        FAIL() << "expected a hypothesis violation";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::hypothesis_violation);
    }
}

TEST(BlueCycleFromRedShorterCycle, RandomizedInstances)
{
    struct Case {
        int n, m, trials;
    };
    std::mt19937_64 rng(31337);
    std::map<std::string, int> routes;
    for (auto [n, m, trials] : {Case{5, 3, 100}, Case{5, 4, 20}, Case{5, 5, 20}, Case{6, 5, 10}}) {
        int vertices = 2 * n + (m - 1) / 2;
        auto cyc = cycle_on(3, n - 1);
        for (int trial = 0; trial < trials; ++trial) {
            TwoColoring c(3, vertices);
            do
                c = sparse_red(3, vertices, cyc, 6 * n, rng);
            while (has_copy(c, Color::red, LooseTemplate::cycle(3, n)));
            auto r = blue_cycle_from_red_shorter_cycle(c, cyc, n, m);
            ++routes[r.route];
            EXPECT_EQ(r.cycle.shape.length(), m);
            auto v = verify_embedding(c, r.cycle);
            ASSERT_TRUE(v.ok) << "(n,m)=(" << n << "," << m << ") trial " << trial << ": " << v.reason;
            EXPECT_EQ(r.cycle.claimed_color, ColorClaim::blue);
        }
    }
    for (const auto & [route, count] : routes)
        RecordProperty("route_" + route, count);
}

TEST(JoinRedCycles, AllRed)
{
    auto c = all_red(4, 18);
    auto t = join_red_cycles(c, cycle_on(4, 3, 1), cycle_on(4, 3, 10), 3);
    EXPECT_TRUE(t.red_outcome);
    EXPECT_EQ(t.route, "construction");
    EXPECT_EQ(t.outcome.shape.length(), 6);
    EXPECT_TRUE(validate_join_trace(c, t, 3, 3, 3).ok);
}

TEST(JoinRedCycles, BlueOutsideTheCycles)
{
    auto c1 = cycle_on(4, 3, 1);
    auto c2 = cycle_on(4, 3, 10);
    auto c = all_blue(4, 18);
    paint(c, c1, Color::red);
    paint(c, c2, Color::red);
    auto t = join_red_cycles(c, c1, c2, 3);
    EXPECT_FALSE(t.red_outcome);
    EXPECT_EQ(t.route, "construction");
    EXPECT_EQ(t.outcome.shape.length(), 3);
    EXPECT_TRUE(validate_join_trace(c, t, 3, 3, 3).ok);
}

TEST(JoinRedCycles, Preconditions)
{
    auto c = all_red(4, 17);
    EXPECT_THROW(join_red_cycles(c, cycle_on(4, 3, 1), cycle_on(4, 3, 9), 3), Error);
    auto c3 = all_red(3, 12);
    EXPECT_THROW(join_red_cycles(c3, cycle_on(3, 3, 1), cycle_on(3, 3, 7), 3), Error);
}

TEST(JoinRedCycles, RandomizedTracesVerify)
{
    std::mt19937_64 rng(4242);
    auto c1 = cycle_on(4, 3, 1);
    auto c2 = cycle_on(4, 3, 10);
    int by_construction = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_coloring(4, 18, 0.5, rng);
        paint(c, c1, Color::red);
        paint(c, c2, Color::red);
        auto t = join_red_cycles(c, c1, c2, 3);
        auto v = validate_join_trace(c, t, 3, 3, 3);
        ASSERT_TRUE(v.ok) << "trial " << trial << ": " << v.reason;
        by_construction += t.route == "construction";
    }
    RecordProperty("by_construction", by_construction);
}

TEST(AdjacentBichromaticPair, SingleBlueEdge)
{
    for (int k = 3; k <= 5; ++k) {
        auto c = all_red(k, k + 3);
        Edge f(iota_vertices(3, k));
        c.set(f, Color::blue);
        auto r = adjacent_bichromatic_pair(c);
        EXPECT_EQ(r.pair.blue_edge, f);
        EXPECT_EQ(intersection_size(r.pair.red_edge, f), k - 1);
        EXPECT_TRUE(validate_pair(c, r.pair).ok);
    }
}

TEST(AdjacentBichromaticPair, Errors)
{
    try {
        adjacent_bichromatic_pair(all_red(3, 6));
        FAIL() << "expected monochromatic-coloring";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::monochromatic_coloring);
    }
    try {
        adjacent_bichromatic_pair(all_red(3, 3));
        FAIL() << "expected host-too-small";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::host_too_small);
    }
}

TEST(AdjacentBichromaticPair, IntersectionGrowsEachIteration)
{
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 500) {
        int k = 3 + static_cast<int>(rng() % 3);
        int n = k + 2 + static_cast<int>(rng() % 5);
        auto c = oracle::random_coloring(k, n, 0.5, rng);
        PairSearch r;
        try {
            r = adjacent_bichromatic_pair(c);
        }
        catch (const Error &) {
            continue; // monochromatic draw
        }
        ++done;
        ASSERT_TRUE(validate_pair(c, r.pair).ok);
        EXPECT_LE(r.iterations, k);
        for (std::size_t j = 1; j < r.intersections.size(); ++j)
            EXPECT_GT(r.intersections[j], r.intersections[j - 1]);
    }
}

TEST(DisjointBichromaticPairs, ScenarioOfTheArgument)
{
    // start pair ({1,2,3}, {1,2,4}); v_1 = 3, v_2 = 1, v_3 = 2, v_4 = 4;
    // W = 5..11 all red, W_1 = {5,6}, W_2 = {7,8}, w = 9, g_1 = {3,5,6} red
    auto c = all_red(3, 11);
    c.set(Edge{1, 2, 4}, Color::blue);
    c.set(Edge{1, 5, 6}, Color::blue);
    c.set(Edge{2, 7, 8}, Color::blue);
    ConstructiveOptions options;
    options.check_hypotheses = false;
    auto d = disjoint_bichromatic_pairs(c, 5, options);
    EXPECT_EQ(d.route, "construction");
    EXPECT_EQ(d.first.red_edge, (Edge{3, 5, 6}));
    EXPECT_EQ(d.first.blue_edge, (Edge{1, 5, 6}));
    EXPECT_EQ(d.second.red_edge, (Edge{7, 8, 9}));
    EXPECT_EQ(d.second.blue_edge, (Edge{2, 7, 8}));
    EXPECT_TRUE(validate_disjoint_pairs(c, d).ok);
}

TEST(DisjointBichromaticPairs, BlueTriangleViolatesHypotheses)
{
    auto c = all_blue(3, 11);
    try {
        disjoint_bichromatic_pairs(c, 5);
        FAIL() << "expected a hypothesis violation";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::hypothesis_violation);
    }
}

TEST(DisjointBichromaticPairs, RandomizedPairsAreDisjoint)
{
    // at k = 3, t = 5 no coloring meets the hypotheses, so only the
    // construction and its fallback are exercised
    std::mt19937_64 rng(2718);
    ConstructiveOptions options;
    options.check_hypotheses = false;
    for (int trial = 0; trial < 50; ++trial) {
        auto c = oracle::random_coloring(3, 11, 0.3 + 0.01 * trial, rng);
        auto d = disjoint_bichromatic_pairs(c, 5, options);
        auto v = validate_disjoint_pairs(c, d);
        ASSERT_TRUE(v.ok) << "trial " << trial << ": " << v.reason;
    }
}

TEST(LiftBlueC4, ListedEdgesFormRedCycles)
{
    for (int k = 4; k <= 6; ++k)
        for (int i = 5; i <= 6; ++i) {
            auto c4 = cycle_on(k, 4, 1, ColorClaim::blue);
            auto c = all_red(k, i * (k - 1) + 1);
            paint(c, c4, Color::blue);
            auto lifted = lift_blue_c4(c, c4, i);
            EXPECT_EQ(lifted.shape.length(), i);
            EXPECT_EQ(lifted.claimed_color, ColorClaim::red);
            EXPECT_TRUE(verify_embedding(c, lifted).ok) << "k=" << k << " i=" << i;
        }
}

TEST(LiftBlueC4, FiveEdgesAtK4)
{
    // v_j = j, W = {13, 14, 15, 16}, w_1 = 13, w_2 = 14
    auto c4 = cycle_on(4, 4, 1, ColorClaim::blue);
    auto c = all_red(4, 16);
    paint(c, c4, Color::blue);
    auto lifted = lift_blue_c4(c, c4, 5);
    std::vector<Edge> expected{{5, 6, 7, 12}, {4, 10, 11, 12}, {2, 3, 4, 9}, {9, 1, 15, 16}, {1, 13, 8, 7}};
    auto edges = lifted.host_edges();
    std::sort(edges.begin(), edges.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(edges, expected);
}

TEST(LiftBlueC4, Errors)
{
    auto c4 = cycle_on(4, 4, 1, ColorClaim::blue);
    auto c = all_red(4, 16);
    paint(c, c4, Color::blue);
    try {
        lift_blue_c4(c, c4, 7);
        FAIL() << "expected invalid-parameter";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_parameter);
    }
    // this also closes a blue C_3 with e_2 and e_3, so skip the hypothesis check
    c.set(Edge{2, 3, 4, 9}, Color::blue);
    ConstructiveOptions options;
    options.check_hypotheses = false;
    try {
        lift_blue_c4(c, c4, 5, options);
        FAIL() << "expected blue-edge-encountered";
    }
    catch (const BlueEdgeEncountered & e) {
        EXPECT_EQ(e.edge(), (Edge{2, 3, 4, 9}));
    }
}
