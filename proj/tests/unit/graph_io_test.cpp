#include <circforce/constructions.hpp>
#include <circforce/errors.hpp>
#include <circforce/graph_io.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace circforce {
namespace {

TEST(ParseCirculant, AcceptsSubscriptNotation)
{
    EXPECT_EQ(parse_circulant("C12(1,6)"), CirculantSpec(12, {1, 6}));
    EXPECT_EQ(parse_circulant("  c 14 ( 3, 5 ,7 ) "), CirculantSpec(14, {3, 5, 7}));
}

TEST(ParseCirculant, ErrorsCarryPosition)
{
    try {
        parse_circulant("C12(1,,6)");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 7);
    }
    try {
        parse_circulant("C12(1,\n 9)");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_NE(std::string(e.what()).find("outside"), std::string::npos);
    }
    EXPECT_THROW(parse_circulant("C12(1,6"), ParseError);
    EXPECT_THROW(parse_circulant("C12(1,6) x"), ParseError);
    EXPECT_THROW(parse_circulant("K4"), ParseError);
    EXPECT_THROW(parse_circulant("C8(2,2)"), ParseError);
}

TEST(ParseGraphExpression, CycleAndComplete)
{
    const auto c = parse_graph_expression("C7");
    EXPECT_EQ(c.graph, cycle_graph(7));
    ASSERT_TRUE(c.circulant);
    EXPECT_EQ(*c.circulant, CirculantSpec(7, {1}));
    EXPECT_TRUE(c.circulant_labeling);

    const auto k = parse_graph_expression("K5");
    EXPECT_EQ(k.graph, complete_graph(5));
    EXPECT_EQ(*k.circulant, CirculantSpec(5, {1, 2}));
    EXPECT_TRUE(k.vertex_transitive);
}

TEST(ParseGraphExpression, BoxProduct)
{
    const auto g = parse_graph_expression("K2 box C4");
    EXPECT_EQ(g.graph, cartesian_product(complete_graph(2), cycle_graph(4)));
    EXPECT_FALSE(g.circulant.has_value());
    EXPECT_EQ(g.label, "K2 box C4");
}

TEST(ParseGraphExpression, TorusProductMapsToCirculant)
{
    for (int n = 3; n <= 5; ++n)
        for (int m = 3; m <= 6; ++m) {
            const auto g = parse_graph_expression("K" + std::to_string(n) + " torus C" + std::to_string(m));
            ASSERT_TRUE(g.circulant);
            EXPECT_FALSE(g.circulant_labeling);
            EXPECT_EQ(g.graph.permuted(torus_to_circulant_labels(n, m)), build_circulant(*g.circulant))
                << g.label;
        }
    const auto cc = parse_graph_expression("C4 torus C5");
    EXPECT_EQ(*cc.circulant, CirculantSpec(20, {1, 5}));
    EXPECT_EQ(cc.graph.permuted(torus_to_circulant_labels(4, 5)), build_circulant(*cc.circulant));
    EXPECT_THROW(parse_graph_expression("K3 torus K4"), ParseError);
    EXPECT_THROW(parse_graph_expression("K3 torus C2"), ParseError);
    EXPECT_THROW(parse_graph_expression("K3 times C4"), ParseError);
}

TEST(EdgeList, RoundTripsWithIsolatedVertices)
{
    const std::vector<Edge> edges{{0, 3}, {1, 2}};
    const Graph g(6, edges);
    const std::string text = to_edge_list(g);
    EXPECT_EQ(text, "# order 6\n0 3\n1 2\n");
    EXPECT_EQ(parse_edge_list(text), g);
}

TEST(EdgeList, WithoutHeaderUsesLargestIndex)
{
    EXPECT_EQ(parse_edge_list("0 1\n\n1 2 \n# comment\n").order(), 3);
}

TEST(EdgeList, Errors)
{
    EXPECT_THROW(parse_edge_list("0 1\n1\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("# order 2\n0 5\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
    try {
        parse_edge_list("0 1\n  x y\n");
        FAIL();
    }
    catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
    }
}

TEST(Dot, ListsVerticesAndEdges)
{
    const std::string dot = to_dot(cycle_graph(3), "C3");
    EXPECT_EQ(dot, "graph \"C3\" {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}

} // namespace
} // namespace circforce
