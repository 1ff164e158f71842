#include <circforce/circulant.hpp>
#include <circforce/graph.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace circforce {
namespace {

TEST(Graph, EdgesAreSortedAndSymmetric)
{
    const std::vector<Edge> edges{{2, 0}, {1, 2}, {3, 1}};
    const Graph g(4, edges);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}}));
    EXPECT_TRUE(g.adjacent(0, 2));
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Graph, RejectsLoopsAndOutOfRange)
{
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> outside{{0, 5}};
    EXPECT_THROW(Graph(3, loop), std::invalid_argument);
    EXPECT_THROW(Graph(3, outside), std::invalid_argument);
    EXPECT_THROW(Graph(65), std::invalid_argument);
}

TEST(Graph, FromAdjacencyRejectsAsymmetry)
{
    EXPECT_THROW(Graph::from_adjacency({0b10, 0b00}), std::invalid_argument);
}

TEST(Graph, CompleteAndCycle)
{
    const Graph k5 = complete_graph(5);
    EXPECT_EQ(k5.edge_count(), 10u);
    EXPECT_TRUE(k5.is_regular());
    EXPECT_EQ(girth(k5), 3);

    const Graph c7 = cycle_graph(7);
    EXPECT_EQ(c7.min_degree(), 2);
    EXPECT_EQ(girth(c7), 7);
    EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Graph, GirthOfForestIsAbsent)
{
    const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    EXPECT_FALSE(girth(Graph(4, path)).has_value());
}

TEST(Graph, GirthOfPetersen)
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    EXPECT_EQ(girth(Graph(10, edges)), 5);
}

TEST(Graph, CartesianProductOfK2AndC4IsCube)
{
    const Graph cube = cartesian_product(complete_graph(2), cycle_graph(4));
    EXPECT_EQ(cube.order(), 8);
    EXPECT_TRUE(cube.is_regular());
    EXPECT_EQ(cube.max_degree(), 3);
    EXPECT_EQ(girth(cube), 4);
    EXPECT_TRUE(is_two_colorable(cube));
}

TEST(Graph, TorusProductWrapsWithATwist)
{
    const Graph g = torus_product(complete_graph(2), 3);
    // copy 2 row 0 joins copy 0 row 1; copy 2 row 1 joins copy 0 row 0.
    EXPECT_TRUE(g.adjacent(4, 1));
    EXPECT_TRUE(g.adjacent(5, 0));
    EXPECT_FALSE(g.adjacent(4, 0));
    EXPECT_THROW(torus_product(complete_graph(3), 2), std::invalid_argument);
}

TEST(Graph, ComponentsAndUnion)
{
    const Graph g = disjoint_union(complete_graph(3), cycle_graph(4));
    const auto parts = components(g);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], 0b0000111u);
    EXPECT_EQ(parts[1], 0b1111000u);
    EXPECT_FALSE(is_connected(g));
}

TEST(Graph, ComplementOfC5IsC5)
{
    const Graph c = complement(cycle_graph(5));
    EXPECT_TRUE(c.is_regular());
    EXPECT_EQ(c.max_degree(), 2);
    EXPECT_EQ(girth(c), 5);
}

TEST(Graph, PermutedAndInduced)
{
    const Graph c4 = cycle_graph(4);
    const std::vector<int> swap{1, 0, 2, 3};
    const Graph p = c4.permuted(swap);
    EXPECT_TRUE(p.adjacent(1, 3));
    EXPECT_TRUE(p.adjacent(0, 2));
    EXPECT_FALSE(p.adjacent(1, 2));
    EXPECT_FALSE(p.adjacent(0, 3));
    const std::vector<int> bad{0, 0, 1, 2};
    EXPECT_THROW(c4.permuted(bad), std::invalid_argument);

    const Graph path = c4.induced(0b0111);
    EXPECT_EQ(path.edge_count(), 2u);
}

TEST(Graph, GirthMatchesBruteForceOnRandomGraphs)
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = testing::random_graph(rng, 8, 0.35);
        // Brute force: shortest cycle through each edge is 1 + distance avoiding that edge.
        std::optional<int> best;
        for (auto [u, v] : g.edges()) {
            std::vector<int> dist(8, -1);
            std::vector<int> queue{u};
            dist[u] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                const int x = queue[i];
                for (int y = 0; y < 8; ++y)
                    if (g.adjacent(x, y) && dist[y] < 0 && !(x == u && y == v)) {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
            }
            if (dist[v] > 0 && (!best || dist[v] + 1 < *best))
                best = dist[v] + 1;
        }
        EXPECT_EQ(girth(g), best) << "trial " << trial;
    }
}

TEST(Circulant, SpecValidation)
{
    EXPECT_THROW(CirculantSpec(8, {}), std::invalid_argument);
    EXPECT_THROW(CirculantSpec(8, {5}), std::invalid_argument);
    EXPECT_THROW(CirculantSpec(8, {2, 2}), std::invalid_argument);
    EXPECT_THROW(CirculantSpec(8, {3, 1}), std::invalid_argument);
    EXPECT_EQ(CirculantSpec::normalized(8, {3, 1}).to_string(), "C8(1,3)");
}

TEST(Circulant, BuildMatchesDefinition)
{
    for (int n = 2; n <= 14; ++n)
        for (const auto& spec : std::vector<std::vector<int>>{{1}, {1, n / 2}, {n / 2}}) {
            if (spec.size() == 2 && spec[0] >= spec[1])
                continue;
            const CirculantSpec c(n, spec);
            const Graph g = build_circulant(c);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    EXPECT_EQ(g.adjacent(i, j), testing::circulant_adjacent(n, spec, i, j));
            EXPECT_TRUE(g.is_regular());
            EXPECT_EQ(g.max_degree(), c.degree());
        }
}

TEST(Circulant, Degree)
{
    EXPECT_EQ(CirculantSpec(12, {1, 6}).degree(), 3);
    EXPECT_EQ(CirculantSpec(12, {1, 5}).degree(), 4);
}

TEST(Circulant, Decompose)
{
    const auto d = decompose(CirculantSpec(14, {2, 6}));
    EXPECT_EQ(d.copies, 2);
    EXPECT_EQ(d.reduced, CirculantSpec(7, {1, 3}));

    const auto k = decompose(CirculantSpec(8, {2, 4}));
    EXPECT_EQ(k.copies, 2);
    EXPECT_EQ(k.reduced, CirculantSpec(4, {1, 2}));

    EXPECT_TRUE(is_connected(CirculantSpec(9, {3, 4})));
    EXPECT_FALSE(is_connected(CirculantSpec(12, {3, 6})));
}

TEST(Circulant, DisconnectedGraphHasCopiesComponents)
{
    const CirculantSpec spec(12, {3, 6});
    const Graph g = build_circulant(spec);
    const auto parts = components(g);
    ASSERT_EQ(parts.size(), 3u);
    for (auto part : parts)
        EXPECT_EQ(count(part), 4);
}

TEST(Circulant, MultiplierIsomorphism)
{
    EXPECT_EQ(multiply(CirculantSpec(7, {1, 3}), 3), CirculantSpec(7, {2, 3}));
    EXPECT_EQ(multiplier_isomorphic(CirculantSpec(7, {1, 3}), CirculantSpec(7, {2, 3})), 3);
    EXPECT_FALSE(multiplier_isomorphic(CirculantSpec(8, {1, 2}), CirculantSpec(8, {1, 3})).has_value());
    EXPECT_THROW(multiply(CirculantSpec(8, {1}), 2), std::invalid_argument);
    EXPECT_EQ(multiplier_units(10), (std::vector<int>{1, 3}));
}

TEST(Circulant, MultiplierRewriteIsAnIsomorphism)
{
    const CirculantSpec spec(13, {1, 5});
    const Graph g = build_circulant(spec);
    for (int k : multiplier_units(13)) {
        const Graph h = build_circulant(multiply(spec, k));
        std::vector<int> f(13);
        for (int i = 0; i < 13; ++i)
            f[i] = k * i % 13;
        EXPECT_EQ(g.permuted(f), h) << "k = " << k;
    }
}

TEST(Circulant, Bipartite)
{
    EXPECT_TRUE(is_bipartite(CirculantSpec(8, {1, 3})));
    EXPECT_FALSE(is_bipartite(CirculantSpec(8, {1, 2})));
    EXPECT_TRUE(is_bipartite(CirculantSpec(10, {1, 5})));
    for (int n = 2; n <= 12; ++n)
        for (int s = 1; 2 * s <= n; ++s) {
            const CirculantSpec spec(n, {s});
            EXPECT_EQ(is_bipartite(spec), is_two_colorable(build_circulant(spec))) << spec.to_string();
        }
}

} // namespace
} // namespace circforce
