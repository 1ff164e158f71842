#include <circforce/bounds.hpp>
#include <circforce/circulant.hpp>
#include <circforce/graph_io.hpp>
#include <circforce/search.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace circforce {
namespace {

LowerBounds of(const char* spec) { return zf_lower_bounds(build_circulant(parse_circulant(spec))); }

TEST(LowerBounds, RegularAndGirth)
{
    const LowerBounds c913 = of("C9(1,3)");
    EXPECT_EQ(c913.regular, 4);
    EXPECT_EQ(c913.girth, 4); // girth 3
    EXPECT_EQ(c913.value, 4);

    const LowerBounds c16 = of("C16(1,4)");
    EXPECT_EQ(c16.girth, 6); // girth 4: (4 - 3)(4 - 2) + 4
    EXPECT_EQ(c16.value, 6);

    const LowerBounds c5 = of("C5(1)");
    EXPECT_EQ(c5.regular, 2);
    EXPECT_EQ(c5.value, 2);
}

TEST(LowerBounds, AbsentForForestsAndIrregularGraphs)
{
    const Graph path = complete_graph(3).induced(0b011);
    EXPECT_FALSE(girth_degree_bound(path).has_value());
    const Graph star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    EXPECT_FALSE(regular_degree_bound(star).has_value());
    EXPECT_EQ(zf_lower_bounds(star).value, 1);
}

TEST(LowerBounds, SumsOverComponents)
{
    const Graph two_cycles = disjoint_union(cycle_graph(5), cycle_graph(7));
    EXPECT_EQ(zf_lower_bounds(two_cycles).value, 4);
    EXPECT_EQ(zf_lower_bounds(Graph(3)).value, 3);
}

TEST(LowerBounds, NeverExceedTheExactValue)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = testing::random_graph(rng, 2 + trial % 9, 0.45);
        EXPECT_LE(zf_lower_bounds(g).value, testing::naive_zero_forcing_number(g));
    }
}

TEST(LowerBounds, GirthBoundOnTwoGeneratorCirculants)
{
    // C_N(1, t) with 2t < N always has the 4-cycle 0, 1, 1 + t, t; a triangle needs
    // t = 2, N = 2t + 1 or N = 3t.
    for (int n = 8; n <= 30; ++n)
        for (int t = 2; 2 * t < n; ++t) {
            const LowerBounds b = zf_lower_bounds(build_circulant(CirculantSpec(n, {1, t})));
            ASSERT_TRUE(b.girth.has_value());
            EXPECT_EQ(*b.girth, t == 2 || 3 * t == n || 2 * t + 1 == n ? 4 : 6) << n << " " << t;
        }
}

} // namespace
} // namespace circforce
