#include <circforce/matrix.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace circforce {
namespace {

RationalMatrix random_low_rank(std::mt19937& rng, int rows, int cols, int rank_target)
{
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    RationalMatrix left(rows, rank_target), right(rank_target, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < rank_target; ++k)
            left(i, k) = make_rational(num(rng), den(rng));
    for (int k = 0; k < rank_target; ++k)
        for (int j = 0; j < cols; ++j)
            right(k, j) = make_rational(num(rng), den(rng));
    return left * right;
}

TEST(Rank, IdentityAndZero)
{
    EXPECT_EQ(rank(RationalMatrix::identity(7)), 7);
    EXPECT_EQ(rank(RationalMatrix(5, 3)), 0);
    EXPECT_EQ(nullity(RationalMatrix(5, 3)), 3);
    EXPECT_EQ(rank(RationalMatrix()), 0);
}

TEST(Rank, RoutesAgreeAndAreInvariant)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const int rows = 1 + trial % 7, cols = 1 + (trial / 7) % 7;
        const int target = std::min({rows, cols, 1 + trial % 4});
        const RationalMatrix m = random_low_rank(rng, rows, cols, target);
        const int r = rank(m);
        EXPECT_LE(r, target);
        EXPECT_EQ(r, rank_gauss(m));
        EXPECT_EQ(r, rank(m.transpose()));
        EXPECT_EQ(r, rank(lift(m)));
        EXPECT_EQ(r, rank_gauss(lift(m)));
        if (m.square()) {
            std::vector<int> perm(static_cast<std::size_t>(rows));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(r, rank(permuted(m, perm)));
        }
    }
}

TEST(Rank, QuadraticEntries)
{
    const QuadFieldPtr field = make_quad_field(make_rational(2));
    const QuadScalar root(0, make_rational(1), field);
    // [[1, √2], [√2, 2]] is singular; [[1, √2], [√2, 3]] is not.
    EXPECT_EQ(rank(QuadMatrix::from_rows({{QuadScalar(1), root}, {root, QuadScalar(2)}})), 1);
    EXPECT_EQ(rank(QuadMatrix::from_rows({{QuadScalar(1), root}, {root, QuadScalar(3)}})), 2);
    EXPECT_EQ(rank_gauss(QuadMatrix::from_rows({{QuadScalar(1), root}, {root, QuadScalar(2)}})), 1);
}

TEST(Matrix, BlocksProductsAndPatterns)
{
    const RationalMatrix i2 = RationalMatrix::identity(2);
    const RationalMatrix o2(2, 2);
    const RationalMatrix m = RationalMatrix::from_blocks({{o2, i2}, {i2, o2}});
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_EQ(m * m, RationalMatrix::identity(4));
    const Graph g = pattern_graph(m);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.adjacent(0, 2));
    EXPECT_THROW(RationalMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    EXPECT_THROW(RationalMatrix(2, 3) * RationalMatrix(2, 3), std::invalid_argument);
    EXPECT_THROW(pattern_graph(RationalMatrix::from_rows({{0, 1}, {0, 0}})), std::invalid_argument);
}

} // namespace
} // namespace circforce
