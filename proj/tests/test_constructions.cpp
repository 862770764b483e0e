#include <gtest/gtest.h>

#include <forbcfg/bounds.hpp>
#include <forbcfg/constructions.hpp>
#include <forbcfg/row_graph.hpp>

using namespace forbcfg;

namespace {

int count_01(const BinaryMatrix& a, int zero_row, int one_row, std::size_t first, std::size_t last)
{
    int n = 0;
    for (std::size_t c = first; c < last; ++c)
        n += !a.at(zero_row, c) && a.at(one_row, c);
    return n;
}

} // namespace

TEST(Constructions, BlockColumnCounts)
{
    const std::size_t expected[] = {3, 7, 11, 15, 21, 24, 27, 31};
    for (int p = 2; p <= 9; ++p) {
        const auto b = builtin_block(p);
        EXPECT_EQ(b.columns(), expected[p - 2]) << "p=" << p;
        EXPECT_TRUE(b.tight);
        EXPECT_EQ(Rational(static_cast<std::int64_t>(b.columns())), cp(p) * Rational(b.rows()));
    }
}

TEST(Constructions, EveryVariantSatisfiesBlockInvariants)
{
    for (int p = 2; p <= 9; ++p)
        for (const auto& v : block_variants(p)) {
            const auto b = builtin_block(p, v);
            EXPECT_TRUE(b.block.is_simple()) << p << " " << v;
            EXPECT_FALSE(b.block.contains_column(all_ones_mask(b.rows())));
            EXPECT_TRUE(avoids_two_row(b.block, p));
        }
    EXPECT_THROW(builtin_block(6, "nope"), std::invalid_argument);
    EXPECT_THROW(builtin_block(7, "cycle"), std::invalid_argument);
    EXPECT_THROW(builtin_block(10), std::out_of_range);
}

TEST(Constructions, TabulatedMiddlesAreBitExact)
{
    // Middles follow K_5^0 and K_5^1, so they start at column 6.
    auto middle_rows = [](const BinaryMatrix& block, std::size_t width) {
        std::vector<std::string> rows;
        for (int r = 0; r < block.rows(); ++r) {
            std::string row;
            for (std::size_t c = 6; c < 6 + width; ++c)
                row += block.at(r, c) ? '1' : '0';
            rows.push_back(row);
        }
        return rows;
    };
    EXPECT_EQ(middle_rows(builtin_block(7).block, 13),
              (std::vector<std::string>{"1111000001100", "1000111001010", "0100100111001", "0010010100111",
                                        "0001001010111"}));
    EXPECT_EQ(middle_rows(builtin_block(8).block, 16),
              (std::vector<std::string>{"1111000011110000", "1000110011001110", "0100101010101101",
                                        "0010010100111011", "0001001101010111"}));
    // The flanks: K_5^0 first, K_5^4 last.
    const auto b7 = builtin_block(7).block;
    EXPECT_EQ(b7.column(0), 0U);
    for (std::size_t c = 19; c < 24; ++c)
        EXPECT_EQ(weight(b7.column(c)), 4);
}

TEST(Constructions, SixRowMiddle)
{
    const auto b = builtin_block(6, "six-row");
    EXPECT_EQ(b.rows(), 6);
    EXPECT_EQ(b.columns(), 24U);
    EXPECT_FALSE(b.tight);
}

TEST(Constructions, P6VariantsHaveThreePatternsPerPair)
{
    // Middle 10 columns sit after the five columns of K_5^4.
    for (const char* v : {"default", "cycle"}) {
        const auto b = builtin_block(6, v).block;
        ASSERT_EQ(b.cols(), 21U);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (i != j) {
                    EXPECT_EQ(count_01(b, i, j, 5, 15), 3) << v << " " << i << "," << j;
                }
    }
    // The complement variant is [K_5^1 K_5^3 K_5^4 K_5^0]; its middle follows K_5^1.
    const auto c = builtin_block(6, "complement").block;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) {
                EXPECT_EQ(count_01(c, i, j, 5, 15), 3);
            }
}

TEST(Constructions, VariantsAreDistinctUpToIsomorphism)
{
    const auto d = builtin_block(6).block;
    const auto c = builtin_block(6, "complement").block;
    const auto g = builtin_block(6, "cycle").block;
    EXPECT_FALSE(isomorphic(d, c));
    EXPECT_FALSE(isomorphic(d, g));
    EXPECT_FALSE(isomorphic(c, g));
}

TEST(Constructions, AssembleExamples)
{
    const auto b3 = builtin_block(3);
    const auto a3 = assemble(ConstructionPlan{3, std::vector<BlockLibraryEntry>(5, b3)});
    EXPECT_EQ(a3.rows(), 15);
    EXPECT_EQ(a3.cols(), 36U);

    const auto b6 = builtin_block(6);
    const auto a6 = assemble(ConstructionPlan{6, {b6, b6}});
    EXPECT_EQ(a6.rows(), 10);
    EXPECT_EQ(a6.cols(), 43U);

    const auto single = assemble(ConstructionPlan{9, {builtin_block(9)}});
    EXPECT_EQ(single.cols(), 32U);
    EXPECT_TRUE(single.same_columns_as(k_full(5)));
}

TEST(Constructions, AssembleRejectsBadPlans)
{
    EXPECT_THROW(assemble(ConstructionPlan{3, {}}), ConstructionError);
    EXPECT_THROW(assemble(ConstructionPlan{4, {builtin_block(3)}}), ConstructionError);
    BlockLibraryEntry bad{3, "bad", k_full(3), false};
    EXPECT_THROW(assemble(ConstructionPlan{3, {bad}}), ConstructionError);
}

TEST(Constructions, AssembledStructure)
{
    const auto b = builtin_block(8);
    const ConstructionPlan plan{8, {b, b, b}};
    const auto a = assemble(plan);
    EXPECT_EQ(a.cols(), 1 + 3 * b.columns());
    const auto g = build_graph(a, 8);
    ASSERT_EQ(g.components.size(), 3U);
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j) {
            if (i == j)
                continue;
            if (i / 5 == j / 5)
                EXPECT_EQ(g.edge(i, j), EdgeClass::Undirected);
            else
                EXPECT_EQ(g.directed(i, j), i / 5 < j / 5);
        }
    EXPECT_TRUE(is_transitive(g));
}

TEST(Constructions, ExtremalExamples)
{
    const auto a37 = builtin_extremal(3, 7);
    EXPECT_EQ(a37.cols(), 17U);
    const auto g = build_graph(a37, 3);
    ASSERT_EQ(g.components.size(), 2U);
    EXPECT_EQ(g.components[0].size(), 4U);
    EXPECT_EQ(g.components[1].size(), 3U);
    EXPECT_TRUE(is_clique(g, 0));
    EXPECT_TRUE(is_clique(g, 1));

    EXPECT_EQ(builtin_extremal(6, 6).cols(), 25U);
    EXPECT_EQ(builtin_extremal(9, 10).cols(), 63U);
    EXPECT_EQ(builtin_extremal(2, 7).cols(), 11U);
}

TEST(Constructions, ExtremalMeetsFormulaAtSupportedResidues)
{
    for (int p = 2; p <= 9; ++p)
        for (int m = 2; m <= 30; ++m) {
            ConstructionPlan plan;
            try {
                plan = extremal_plan(p, m);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const auto a = assemble(plan);
            EXPECT_EQ(a.rows(), m);
            EXPECT_TRUE(a.is_simple());
            EXPECT_TRUE(avoids_two_row(a, p));
            EXPECT_EQ(static_cast<std::int64_t>(a.cols()), forb_bound(p, m).value) << "p=" << p << " m=" << m;
        }
}

TEST(Constructions, UnsupportedResidues)
{
    EXPECT_THROW(builtin_extremal(7, 6), std::invalid_argument);
    EXPECT_THROW(builtin_extremal(4, 6), std::invalid_argument);
    EXPECT_THROW(builtin_extremal(3, 2), std::invalid_argument);
    EXPECT_THROW(builtin_extremal(6, 1), std::invalid_argument);
}

TEST(Constructions, ConjectureBlock)
{
    const auto b = conjecture_block(5);
    EXPECT_EQ(b.p, 9);
    EXPECT_EQ(b.columns(), 31U);
    const auto b4 = conjecture_block(4);
    EXPECT_EQ(b4.p, 5);
    EXPECT_EQ(b4.columns(), 15U);
    EXPECT_TRUE(avoids_two_row(b4.block, 5));
    EXPECT_FALSE(avoids_two_row(b4.block, 4));
}
