#include <gtest/gtest.h>

#include <random>

#include <forbcfg/constructions.hpp>
#include <forbcfg/row_graph.hpp>

#include "oracles.hpp"

using namespace forbcfg;

namespace {

// Rows a, b, c: a-b and b-c undirected, a -> c directed.
BinaryMatrix path_block() { return BinaryMatrix(3, {0b000, 0b010, 0b101, 0b011}); }

} // namespace

TEST(RowGraph, ClassifyPair)
{
    EXPECT_EQ(classify_pair(0, 0), EdgeClass::Duplicate);
    EXPECT_EQ(classify_pair(0, 3), EdgeClass::DirectedForward);
    EXPECT_EQ(classify_pair(2, 0), EdgeClass::DirectedBackward);
    EXPECT_EQ(classify_pair(1, 1), EdgeClass::Undirected);
    EXPECT_STREQ(to_string(EdgeClass::DirectedForward), "forward");
}

TEST(RowGraph, K3IsOneUndirectedClique)
{
    const auto g = build_graph(k_full(3), 3);
    ASSERT_EQ(g.components.size(), 1U);
    EXPECT_EQ(g.components[0], (std::vector<int>{0, 1, 2}));
    EXPECT_TRUE(is_clique(g, 0));
    for (const auto& e : g.edges)
        EXPECT_EQ(e.cls, EdgeClass::Undirected);
    ASSERT_TRUE(g.order.has_value());
    EXPECT_TRUE(reassemble(g).same_columns_as(k_full(3)));
}

TEST(RowGraph, ExtremalP6On25RowsHasFiveCliques)
{
    const auto a = builtin_extremal(6, 25);
    const auto g = build_graph(a, 6);
    ASSERT_EQ(g.components.size(), 5U);
    ASSERT_TRUE(g.order.has_value());
    EXPECT_EQ(*g.order, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
    for (std::size_t c = 0; c < 5; ++c) {
        EXPECT_EQ(g.components[c].size(), 5U);
        EXPECT_EQ(g.components[c].front(), static_cast<int>(5 * c));
        EXPECT_TRUE(is_clique(g, c));
        EXPECT_EQ(g.blocks[c].matrix.cols(), 21U);
    }
    EXPECT_TRUE(is_transitive(g));
    EXPECT_TRUE(reassemble(g).same_columns_as(a));
}

TEST(RowGraph, NonCliqueComponent)
{
    const BlockLibraryEntry path{7, "path", path_block(), false};
    const BlockLibraryEntry k3{7, "K3", concat(k_slice(3, 2), k_slice(3, 1), k_slice(3, 0)), false};
    const auto a = assemble(ConstructionPlan{7, {path, k3}});
    const auto g = build_graph(a, 7);
    ASSERT_EQ(g.components.size(), 2U);
    EXPECT_EQ(g.components[0], (std::vector<int>{0, 1, 2}));
    EXPECT_FALSE(is_clique(g, 0));
    EXPECT_TRUE(is_clique(g, 1));
    EXPECT_EQ(g.edge(0, 2), EdgeClass::DirectedForward);
    EXPECT_EQ(g.edge(2, 0), EdgeClass::DirectedBackward);
    EXPECT_EQ(g.edge(0, 1), EdgeClass::Undirected);
    EXPECT_EQ(g.edge(1, 2), EdgeClass::Undirected);
    EXPECT_TRUE(is_transitive(g));
    EXPECT_TRUE(reassemble(g).same_columns_as(a));
    EXPECT_THROW(is_clique(g, 2), std::out_of_range);
}

TEST(RowGraph, TransitivityOnHandBuiltReport)
{
    // i -> j, j -> k with k - i undirected cannot come from a matrix (the
    // directed relation is containment of supports), so build it directly.
    GraphReport g;
    g.m = 3;
    g.edges = {{0, 1, EdgeClass::DirectedForward}, {0, 2, EdgeClass::Undirected}, {1, 2, EdgeClass::DirectedForward}};
    EXPECT_FALSE(is_transitive(g));
    g.edges[1].cls = EdgeClass::DirectedForward;
    EXPECT_TRUE(is_transitive(g));
}

TEST(RowGraph, DirectedPartIsAlwaysTransitive)
{
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 5);
        const auto a = oracle::random_simple_matrix(rng, m, static_cast<int>(rng() % 16));
        const int p = 1 + static_cast<int>(rng() % 9);
        if (!avoids_two_row(a, p))
            continue;
        ++checked;
        EXPECT_TRUE(is_transitive(build_graph(a, p))) << to_compact(a);
    }
    EXPECT_GT(checked, 500);
}

TEST(RowGraph, DuplicateRowsGiveCycleCertificate)
{
    // Rows 0 and 1 are equal: each points at the other.
    const auto a = from_text("3 3\n011\n011\n010\n");
    const auto g = build_graph(a, 3);
    EXPECT_EQ(g.edge(0, 1), EdgeClass::Duplicate);
    EXPECT_TRUE(g.directed(0, 1));
    EXPECT_TRUE(g.directed(1, 0));
    EXPECT_FALSE(g.order.has_value());
    EXPECT_GE(g.cycle.size(), 2U);
    EXPECT_THROW(reassemble(g), std::invalid_argument);
}

TEST(RowGraph, RefusesMatricesContainingF)
{
    try {
        (void)build_graph(k_full(5), 8);
        FAIL() << "expected PatternContainedError";
    } catch (const PatternContainedError& e) {
        EXPECT_EQ(e.witness().rows.size(), 2U);
        EXPECT_EQ(e.witness().columns.size(), 9U);
    }
}

TEST(RowGraph, ReassemblyRoundTripsOrderedInputs)
{
    std::mt19937_64 rng(29);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 5);
        auto a = oracle::random_simple_matrix(rng, m, 2 + static_cast<int>(rng() % 14));
        const int p = 2 + static_cast<int>(rng() % 8);
        if (!a.contains_column(0) || !a.contains_column(all_ones_mask(m)) || !avoids_two_row(a, p))
            continue;
        const auto g = build_graph(a, p);
        if (!g.order)
            continue;
        ++checked;
        // Column sets can differ only in the zero column of a non-first block.
        const auto b = reassemble(g);
        for (ColumnMask c : b.columns())
            EXPECT_TRUE(a.contains_column(c)) << to_compact(a);
    }
    EXPECT_GT(checked, 100);
}

TEST(RowGraph, ComponentsPartitionRows)
{
    const auto g = build_graph(builtin_extremal(3, 8), 3);
    std::vector<int> seen;
    for (const auto& c : g.components)
        seen.insert(seen.end(), c.begin(), c.end());
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
    for (int r = 0; r < 8; ++r) {
        const auto& comp = g.components[static_cast<std::size_t>(g.component_of[static_cast<std::size_t>(r)])];
        EXPECT_TRUE(std::find(comp.begin(), comp.end(), r) != comp.end());
    }
}
