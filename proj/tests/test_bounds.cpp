#include <gtest/gtest.h>

#include <forbcfg/bounds.hpp>
#include <forbcfg/constructions.hpp>

using namespace forbcfg;

namespace {

// floor(2k + (t-4)k(k-1) / (4(k-2))) over a common integer denominator.
long long simple_bound_oracle(long long k, long long t)
{
    const long long num = 8 * k * (k - 2) + (t - 4) * k * (k - 1);
    const long long den = 4 * (k - 2);
    return num / den;
}

} // namespace

TEST(Bounds, RationalHelpers)
{
    EXPECT_EQ(to_string(Rational(6, 5)), "6/5");
    EXPECT_EQ(to_string(Rational(10, 5)), "2");
    EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
    EXPECT_EQ(floor(Rational(-1, 3)), -1);
    EXPECT_EQ(floor(Rational(7, 3)), 2);
    EXPECT_EQ(floor(Rational(6, 3)), 2);
}

TEST(Bounds, CpTable)
{
    EXPECT_EQ(cp(2), Rational(3, 2));
    EXPECT_EQ(cp(3), Rational(7, 3));
    EXPECT_EQ(cp(4), Rational(11, 4));
    EXPECT_EQ(cp(5), Rational(15, 4));
    EXPECT_EQ(cp(6), Rational(21, 5));
    EXPECT_EQ(cp(7), Rational(24, 5));
    EXPECT_EQ(cp(8), Rational(27, 5));
    EXPECT_EQ(cp(9), Rational(31, 5));
    EXPECT_THROW(cp(1), std::out_of_range);
    EXPECT_THROW(cp(10), std::out_of_range);
}

TEST(Bounds, UpperBoundNonsimple)
{
    EXPECT_EQ(upper_bound_nonsimple(5, 10), 25);
    EXPECT_EQ(upper_bound_nonsimple(5, 3), 7);
    EXPECT_THROW(upper_bound_nonsimple(1, 3), std::invalid_argument);
}

TEST(Bounds, UpperBoundSimpleTable)
{
    EXPECT_EQ(upper_bound_simple(6, 10), 23);
    EXPECT_EQ(upper_bound_simple(6, 12), 27);
    EXPECT_EQ(upper_bound_simple(6, 14), 30);
    EXPECT_EQ(upper_bound_simple(6, 16), 34);
    EXPECT_EQ(upper_bound_simple(7, 10), 26);
    EXPECT_EQ(upper_bound_simple(7, 12), 30);
    EXPECT_EQ(upper_bound_simple(7, 14), 35);
    EXPECT_EQ(upper_bound_simple(7, 16), 39);
    EXPECT_EQ(upper_bound_simple(5, 10), 20);
    EXPECT_EQ(upper_bound_simple(5, 12), 23);
    EXPECT_EQ(upper_bound_simple(5, 14), 26);
    EXPECT_EQ(upper_bound_simple(5, 16), 30);
}

TEST(Bounds, UpperBoundSimpleMatchesIntegerOracle)
{
    for (int k = 3; k <= 12; ++k)
        for (int t = 4; t <= simple_bound_t_limit(k); ++t)
            EXPECT_EQ(upper_bound_simple(k, t), simple_bound_oracle(k, t)) << k << "," << t;
}

TEST(Bounds, DegenerateT4GivesTwoK)
{
    for (int k = 3; k <= 20; ++k)
        EXPECT_EQ(upper_bound_simple(k, 4), 2 * k);
}

TEST(Bounds, WindowGuard)
{
    EXPECT_EQ(simple_bound_t_limit(3), 12);
    EXPECT_EQ(simple_bound_t_limit(5), 30);
    EXPECT_THROW(upper_bound_simple(3, 13), FormulaNotApplicable);
    EXPECT_THROW(upper_bound_simple(5, 3), FormulaNotApplicable);
    EXPECT_THROW(upper_bound_simple(2, 4), FormulaNotApplicable);
    EXPECT_NO_THROW(upper_bound_simple(3, 12));
}

TEST(Bounds, LargeCliqueCostAtLeastOne)
{
    for (int p : {3, 6, 7, 8, 9})
        for (int k = 6; k <= 20; ++k) {
            const int t = 2 * p - 2;
            if (t < 4 || t > simple_bound_t_limit(k))
                continue;
            const Rational cost = cp(p) * Rational(k) - Rational(upper_bound_simple(k, t) + 1);
            if (p == 7 && k == 6)
                EXPECT_EQ(cost, Rational(4, 5));
            else
                EXPECT_GE(cost, Rational(1)) << "p=" << p << " k=" << k;
        }
}

TEST(Bounds, CostsAtSevenRows)
{
    // Exact values; see the notes in the README on the k=7 row.
    const Rational expected[] = {Rational(12, 5), Rational(13, 5), Rational(9, 5), Rational(17, 5)};
    for (int p = 6; p <= 9; ++p)
        EXPECT_EQ(cp(p) * Rational(7) - Rational(upper_bound_simple(7, 2 * p - 2) + 1),
                  expected[p - 6]);
}

TEST(Bounds, ComponentCostClique4ForP3)
{
    const auto a = builtin_extremal(3, 7);
    const auto g = build_graph(a, 3);
    ASSERT_EQ(g.components.size(), 2U);
    const auto c = component_cost(g, 0);
    EXPECT_EQ(c.rows, 4);
    EXPECT_EQ(c.columns, 9U);
    EXPECT_TRUE(c.deletion_simple);
    ASSERT_TRUE(c.cost.has_value());
    EXPECT_EQ(*c.cost, Rational(1, 3));
}

TEST(Bounds, ComponentCostTightBlockIsZero)
{
    const auto a = builtin_extremal(6, 10);
    for (std::size_t c = 0; c < 2; ++c) {
        const auto r = component_cost(a, 6, c);
        EXPECT_EQ(r.columns, 21U);
        ASSERT_TRUE(r.cost.has_value());
        EXPECT_EQ(*r.cost, Rational(0));
    }
}

TEST(Bounds, ComponentCostSixRowClique)
{
    // 23 non-constant columns plus the zero column on the six rows.
    const auto a = builtin_extremal(6, 6);
    const auto g = build_graph(a, 6);
    ASSERT_EQ(g.components.size(), 1U);
    const auto c = component_cost(g, 0);
    EXPECT_EQ(c.columns, 24U);
    ASSERT_TRUE(c.cost.has_value());
    EXPECT_EQ(*c.cost, Rational(6, 5));
}

TEST(Bounds, ComponentCostReportsNonSimpleDeletion)
{
    // Rows 0 and 2 are equal, so the component digraph is cyclic; deleting
    // row 1 with its block leaves two copies of column 011 on rows 0, 2, 3.
    const auto a = from_text("4 3\n011\n001\n011\n000\n");
    const auto g = build_graph(a, 3);
    ASSERT_FALSE(g.order.has_value());
    const auto c = component_cost(g, static_cast<std::size_t>(g.component_of[1]));
    EXPECT_FALSE(c.deletion_simple);
    EXPECT_FALSE(c.cost.has_value());
    EXPECT_THROW(component_cost(g, 99), std::out_of_range);
}

TEST(Bounds, ForbBoundExamples)
{
    EXPECT_EQ(forb_bound(3, 10).value, 24);
    EXPECT_EQ(forb_bound(3, 10).status, BoundStatus::Exact);
    EXPECT_EQ(forb_bound(6, 5).value, 22);
    EXPECT_EQ(forb_bound(6, 5).status, BoundStatus::Exact);
    EXPECT_EQ(forb_bound(6, 6).value, 25);
    EXPECT_EQ(forb_bound(6, 6).status, BoundStatus::Exact);
    EXPECT_EQ(forb_bound(6, 7).status, BoundStatus::UpperBoundProven);
    EXPECT_EQ(forb_bound(7, 6).status, BoundStatus::UpperBoundProven);
    EXPECT_EQ(forb_bound(8, 10).status, BoundStatus::Exact);
    EXPECT_EQ(forb_bound(4, 8).status, BoundStatus::ConstructionLowerBoundOnly);
    EXPECT_EQ(forb_bound(2, 5).value, 8);
    EXPECT_THROW(forb_bound(10, 5), std::out_of_range);
    EXPECT_THROW(forb_bound(6, 1), std::invalid_argument);
}

TEST(Bounds, ExactBoundsMatchConstructions)
{
    for (int p = 3; p <= 9; ++p)
        for (int m = 3; m <= 30; ++m) {
            const auto b = forb_bound(p, m);
            if (b.status != BoundStatus::Exact)
                continue;
            EXPECT_EQ(static_cast<std::int64_t>(builtin_extremal(p, m).cols()), b.value) << p << "," << m;
        }
}

TEST(Bounds, ConjectureBound)
{
    EXPECT_EQ(conjecture_bound(5, 5).value, 32);
    EXPECT_EQ(conjecture_bound(5, 5).p, 9);
    EXPECT_EQ(conjecture_bound(3, 3).value, 8);
    EXPECT_EQ(conjecture_bound(3, 3).p, 3);
    EXPECT_EQ(conjecture_bound(4, 4).value, 16);
    EXPECT_EQ(conjecture_bound(4, 4).p, 5);
    EXPECT_THROW(conjecture_bound(1, 4), std::invalid_argument);
}
