#ifndef FORBCFG_CONSTRUCTIONS_HPP
#define FORBCFG_CONSTRUCTIONS_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "config_check.hpp"
#include "matrix.hpp"

namespace forbcfg {

/// A diagonal block B_i for the block-triangular construction. Holds the
/// zero column when the block uses it, never the all-ones column.
struct BlockLibraryEntry {
    int p = 0;
    std::string name;
    BinaryMatrix block;
    /// The block attains c_p * rows columns exactly.
    bool tight = false;

    int rows() const { return block.rows(); }
    std::size_t columns() const { return block.cols(); }
};

struct ConstructionPlan {
    int p = 0;
    std::vector<BlockLibraryEntry> blocks;

    int total_rows() const
    {
        int m = 0;
        for (const auto& b : blocks)
            m += b.rows();
        return m;
    }
};

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Matrix from row strings; row r of the result is rows[r].
inline BinaryMatrix from_rows(std::initializer_list<std::string_view> rows)
{
    const std::size_t n = rows.begin()->size();
    std::vector<ColumnMask> columns(n, 0);
    int r = 0;
    for (std::string_view row : rows) {
        if (row.size() != n)
            throw std::logic_error("from_rows: ragged table");
        for (std::size_t c = 0; c < n; ++c)
            if (row[c] == '1')
                columns[c] |= ColumnMask{1} << r;
        ++r;
    }
    return BinaryMatrix(r, std::move(columns));
}

/// Incidence matrix of the cycle visiting `order`: one weight-2 column per edge.
inline BinaryMatrix cycle_incidence(int k, std::initializer_list<int> order)
{
    std::vector<int> v(order);
    std::vector<ColumnMask> columns;
    for (std::size_t e = 0; e < v.size(); ++e)
        columns.push_back((ColumnMask{1} << v[e]) | (ColumnMask{1} << v[(e + 1) % v.size()]));
    return BinaryMatrix(k, std::move(columns));
}

// 5x13 middle of the p=7 block; flanked by K_5^0 K_5^1 and K_5^4.
inline BinaryMatrix p7_middle()
{
    return from_rows({
        "1111000001100",
        "1000111001010",
        "0100100111001",
        "0010010100111",
        "0001001010111",
    });
}

// 5x16 middle of the p=8 block.
inline BinaryMatrix p8_middle()
{
    return from_rows({
        "1111000011110000",
        "1000110011001110",
        "0100101010101101",
        "0010010100111011",
        "0001001101010111",
    });
}

// 6x11 middle of the 25-column matrix in Avoid(6, F(0,6,1,0)).
inline BinaryMatrix p6_six_row_middle()
{
    return from_rows({
        "10111000000",
        "10000111000",
        "10000000111",
        "01100100100",
        "01010010010",
        "01001001001",
    });
}

inline BinaryMatrix without_ones(const BinaryMatrix& a)
{
    std::vector<ColumnMask> columns;
    const ColumnMask full = all_ones_mask(a.rows());
    for (ColumnMask c : a.columns())
        if (c != full)
            columns.push_back(c);
    return BinaryMatrix(a.rows(), std::move(columns));
}

inline BinaryMatrix complement_nonconstant(const BinaryMatrix& a)
{
    std::vector<ColumnMask> columns;
    const ColumnMask full = all_ones_mask(a.rows());
    for (ColumnMask c : a.columns())
        columns.push_back((c == 0 || c == full) ? c : (~c & full));
    return BinaryMatrix(a.rows(), std::move(columns));
}

} // namespace detail

/// Throws ConstructionError unless the block is simple, avoids F(0,p,1,0),
/// lacks the all-ones column and, when tight, has c_p * rows columns.
inline void validate_block(const BlockLibraryEntry& entry)
{
    const auto& b = entry.block;
    const std::string who = "block '" + entry.name + "' (p=" + std::to_string(entry.p) + ")";
    if (!b.is_simple())
        throw ConstructionError(who + " is not simple");
    if (b.contains_column(all_ones_mask(b.rows())))
        throw ConstructionError(who + " has an all-ones column");
    if (!avoids_two_row(b, entry.p))
        throw ConstructionError(who + " contains F(0," + std::to_string(entry.p) + ",1,0)");
    if (entry.tight && Rational(static_cast<std::int64_t>(b.cols())) != cp(entry.p) * Rational(b.rows()))
        throw ConstructionError(who + " has " + std::to_string(b.cols()) + " columns, not c_p * " +
                                std::to_string(b.rows()));
}

inline std::vector<std::string> block_variants(int p)
{
    std::vector<std::string> names{"default", "complement"};
    if (p == 3) {
        names.push_back("clique4");
        names.push_back("clique5");
    }
    if (p == 6) {
        names.push_back("cycle");
        names.push_back("six-row");
    }
    return names;
}

/// Named building blocks, validated before they are returned.
///
///  p=2 K_2 minus 1_2            p=3 [K_3^2 K_3^1 K_3^0]
///  p=4 [K_4^3 D K_4^1 K_4^0]    p=5 [K_4^3 K_4^2 K_4^1 K_4^0]
///  p=6 [K_5^4 K_5^2 K_5^1 K_5^0], "cycle" [K_5^4 G_5 (G_5')^c K_5^1 K_5^0],
///      "six-row" the 6-rowed block with 24 columns
///  p=7, p=8 [K_5^0 K_5^1 M K_5^4] with tabulated middles M
///  p=9 K_5 minus 1_5
/// "complement" flips every non-constant column of the default block.
inline BlockLibraryEntry builtin_block(int p, std::string_view variant = "default")
{
    if (p < 2 || p > 9)
        throw std::out_of_range("builtin_block: p must be in [2, 9], got " + std::to_string(p));
    BlockLibraryEntry e;
    e.p = p;
    e.name = std::string(variant);

    if (variant == "default" || variant == "complement") {
        e.tight = true;
        switch (p) {
        case 2:
            e.block = detail::without_ones(k_full(2));
            break;
        case 3:
            e.block = concat(k_slice(3, 2), k_slice(3, 1), k_slice(3, 0));
            break;
        case 4: {
            // D: two complementary columns of sum 2.
            const BinaryMatrix d(4, {0b0011, 0b1100});
            e.block = concat(k_slice(4, 3), d, k_slice(4, 1), k_slice(4, 0));
            break;
        }
        case 5:
            e.block = concat(k_slice(4, 3), k_slice(4, 2), k_slice(4, 1), k_slice(4, 0));
            break;
        case 6:
            e.block = concat(k_slice(5, 4), k_slice(5, 2), k_slice(5, 1), k_slice(5, 0));
            break;
        case 7:
            e.block = concat(k_slice(5, 0), k_slice(5, 1), detail::p7_middle(), k_slice(5, 4));
            break;
        case 8:
            e.block = concat(k_slice(5, 0), k_slice(5, 1), detail::p8_middle(), k_slice(5, 4));
            break;
        case 9:
            e.block = detail::without_ones(k_full(5));
            break;
        }
        if (variant == "complement")
            e.block = detail::complement_nonconstant(e.block);
    } else if (p == 6 && variant == "cycle") {
        // G_5 on the cycle 0-1-2-3-4, G_5' on its complement 0-2-4-1-3.
        const BinaryMatrix g5 = detail::cycle_incidence(5, {0, 1, 2, 3, 4});
        const BinaryMatrix g5_prime = detail::cycle_incidence(5, {0, 2, 4, 1, 3});
        e.block = concat(k_slice(5, 4), g5, complement(g5_prime), k_slice(5, 1), k_slice(5, 0));
        e.tight = true;
    } else if (p == 6 && variant == "six-row") {
        e.block = concat(k_slice(6, 5), detail::p6_six_row_middle(), k_slice(6, 1), k_slice(6, 0));
    } else if (p == 3 && variant == "clique4") {
        e.block = concat(k_slice(4, 3), k_slice(4, 1), k_slice(4, 0));
    } else if (p == 3 && variant == "clique5") {
        e.block = concat(k_slice(5, 4), k_slice(5, 1), k_slice(5, 0));
    } else {
        throw std::invalid_argument("builtin_block: unknown variant '" + std::string(variant) + "' for p=" +
                                    std::to_string(p));
    }
    validate_block(e);
    return e;
}

/// K_t minus 1_t, the block behind the conjectured bound for
/// F(0, 2^(t-2)+1, 1, 0).
inline BlockLibraryEntry conjecture_block(int t)
{
    if (t < 2 || t > 20)
        throw std::invalid_argument("conjecture_block: t must be in [2, 20]");
    BlockLibraryEntry e;
    e.p = (1 << (t - 2)) + 1;
    e.name = "K_" + std::to_string(t) + " minus 1";
    e.block = detail::without_ones(k_full(t));
    if (!e.block.is_simple() || !avoids_two_row(e.block, e.p))
        throw ConstructionError("conjecture_block: verification failed for t=" + std::to_string(t));
    return e;
}

/// The block-triangular matrix: block i on its rows, ones above the
/// diagonal, zeros below, then one all-ones column. The result is checked
/// to be simple and to avoid F(0,p,1,0).
inline BinaryMatrix assemble(const ConstructionPlan& plan)
{
    if (plan.blocks.empty())
        throw ConstructionError("assemble: empty plan");
    for (const auto& b : plan.blocks) {
        if (b.p != plan.p)
            throw ConstructionError("assemble: block '" + b.name + "' is for p=" + std::to_string(b.p));
        validate_block(b);
    }
    const int m = plan.total_rows();
    if (m > BinaryMatrix::kMaxRows)
        throw ConstructionError("assemble: " + std::to_string(m) + " rows exceed the 63-row limit");

    std::vector<ColumnMask> columns;
    int offset = 0;
    for (const auto& b : plan.blocks) {
        const ColumnMask above = all_ones_mask(offset);
        for (ColumnMask local : b.block.columns())
            columns.push_back(above | (local << offset));
        offset += b.rows();
    }
    columns.push_back(all_ones_mask(m));
    BinaryMatrix a(m, std::move(columns));

    if (!a.is_simple())
        throw ConstructionError("assemble: result is not simple");
    if (!avoids_two_row(a, plan.p))
        throw ConstructionError("assemble: result contains F(0," + std::to_string(plan.p) + ",1,0)");
    return a;
}

/// Supported (p, m): p=2 all m >= 2; p=3 all m >= 3; p=4,5 with m = 0 mod 4;
/// p=6..9 with m = 0 mod 5; p=6 with m = 1 mod 5, m >= 6.
inline ConstructionPlan extremal_plan(int p, int m)
{
    auto unsupported = [&] {
        return std::invalid_argument("builtin_extremal: no construction for p=" + std::to_string(p) +
                                     ", m=" + std::to_string(m));
    };
    ConstructionPlan plan{p, {}};
    auto repeat = [&](const BlockLibraryEntry& b, int rows) {
        for (int r = 0; r < rows; r += b.rows())
            plan.blocks.push_back(b);
    };
    switch (p) {
    case 2:
        if (m < 2)
            throw unsupported();
        if (m % 2 == 1) {
            BlockLibraryEntry single{2, "single-row", BinaryMatrix(1, {0}), false};
            plan.blocks.push_back(single);
        }
        repeat(builtin_block(2), m - m % 2);
        break;
    case 3:
        if (m < 3)
            throw unsupported();
        if (m % 3 == 1)
            plan.blocks.push_back(builtin_block(3, "clique4"));
        else if (m % 3 == 2)
            plan.blocks.push_back(builtin_block(3, "clique5"));
        repeat(builtin_block(3), m - plan.total_rows());
        break;
    case 4:
    case 5:
        if (m < 4 || m % 4 != 0)
            throw unsupported();
        repeat(builtin_block(p), m);
        break;
    case 6:
        if (m >= 6 && m % 5 == 1) {
            plan.blocks.push_back(builtin_block(6, "six-row"));
            repeat(builtin_block(6), m - 6);
            break;
        }
        [[fallthrough]];
    case 7:
    case 8:
    case 9:
        if (m < 5 || m % 5 != 0)
            throw unsupported();
        repeat(builtin_block(p), m);
        break;
    default:
        throw unsupported();
    }
    return plan;
}

inline BinaryMatrix builtin_extremal(int p, int m) { return assemble(extremal_plan(p, m)); }

} // namespace forbcfg

#endif // FORBCFG_CONSTRUCTIONS_HPP
