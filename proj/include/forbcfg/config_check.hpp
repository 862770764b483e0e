#ifndef FORBCFG_CONFIG_CHECK_HPP
#define FORBCFG_CONFIG_CHECK_HPP

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matrix.hpp"

namespace forbcfg {

/// F(0,p,1,0): row 0 is p ones then a zero, row 1 is p zeros then a one.
inline BinaryMatrix two_row_pattern(int p)
{
    if (p < 1)
        throw std::invalid_argument("F(0,p,1,0) needs p >= 1, got " + std::to_string(p));
    std::vector<ColumnMask> columns(static_cast<std::size_t>(p), ColumnMask{0b01});
    columns.push_back(ColumnMask{0b10});
    return BinaryMatrix(2, std::move(columns));
}

/// The object being avoided: an arbitrary (0,1)-matrix, or F(0,p,1,0).
class ForbiddenPattern {
public:
    static ForbiddenPattern two_row(int p)
    {
        if (p < 1)
            throw std::invalid_argument("F(0,p,1,0) needs p >= 1, got " + std::to_string(p));
        return ForbiddenPattern(p);
    }
    static ForbiddenPattern general(BinaryMatrix f) { return ForbiddenPattern(std::move(f)); }

    bool is_two_row() const { return std::holds_alternative<int>(value_); }
    int p() const { return std::get<int>(value_); }

    BinaryMatrix expand() const
    {
        if (is_two_row())
            return two_row_pattern(p());
        return std::get<BinaryMatrix>(value_);
    }

    std::string describe() const
    {
        if (is_two_row())
            return "F(0," + std::to_string(p()) + ",1,0)";
        const auto& f = std::get<BinaryMatrix>(value_);
        return std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " matrix";
    }

private:
    explicit ForbiddenPattern(int p) : value_(p) {}
    explicit ForbiddenPattern(BinaryMatrix f) : value_(std::move(f)) {}

    std::variant<BinaryMatrix, int> value_;
};

/// For every ordered row pair (i, j), the number of columns with 0 in row i
/// and 1 in row j.
class PairProfile {
public:
    PairProfile() = default;
    PairProfile(int m, std::size_t total, std::vector<int> n01)
        : m_(m), total_(total), n01_(std::move(n01))
    {
    }

    int rows() const { return m_; }
    std::size_t total_columns() const { return total_; }
    int n01(int i, int j) const { return n01_[static_cast<std::size_t>(i * m_ + j)]; }
    /// Columns on which rows i and j agree.
    int equal(int i, int j) const { return static_cast<int>(total_) - n01(i, j) - n01(j, i); }

private:
    int m_ = 0;
    std::size_t total_ = 0;
    std::vector<int> n01_;
};

namespace detail {

/// Rows as bitsets over column positions.
inline std::vector<std::vector<std::uint64_t>> transpose(const BinaryMatrix& a)
{
    const std::size_t words = (a.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(a.rows()),
                                                 std::vector<std::uint64_t>(words, 0));
    for (std::size_t c = 0; c < a.cols(); ++c) {
        ColumnMask mask = a.column(c);
        while (mask) {
            int r = std::countr_zero(mask);
            rows[static_cast<std::size_t>(r)][c / 64] |= std::uint64_t{1} << (c % 64);
            mask &= mask - 1;
        }
    }
    return rows;
}

} // namespace detail

inline PairProfile pair_profile(const BinaryMatrix& a)
{
    const int m = a.rows();
    if (m < 2)
        throw std::invalid_argument("pair_profile needs at least 2 rows");
    const auto rows = detail::transpose(a);
    const std::size_t words = rows.front().size();
    std::vector<int> n01(static_cast<std::size_t>(m * m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j)
                continue;
            int count = 0;
            for (std::size_t w = 0; w < words; ++w)
                count += std::popcount(~rows[static_cast<std::size_t>(i)][w] & rows[static_cast<std::size_t>(j)][w]);
            n01[static_cast<std::size_t>(i * m + j)] = count;
        }
    return PairProfile(m, a.cols(), std::move(n01));
}

/// The pair condition: rows avoid F(0,p,1,0) iff both directions are below
/// p, or one direction is empty.
inline bool pair_avoids(int n01_ij, int n01_ji, int p)
{
    return (n01_ij <= p - 1 && n01_ji <= p - 1) || n01_ij == 0 || n01_ji == 0;
}

inline bool avoids_two_row(const PairProfile& profile, int p)
{
    for (int i = 0; i < profile.rows(); ++i)
        for (int j = i + 1; j < profile.rows(); ++j)
            if (!pair_avoids(profile.n01(i, j), profile.n01(j, i), p))
                return false;
    return true;
}

inline bool avoids_two_row(const BinaryMatrix& a, int p)
{
    if (p < 1)
        throw std::invalid_argument("avoids_two_row: p must be >= 1");
    if (a.rows() < 2 || a.cols() < static_cast<std::size_t>(p) + 1)
        return true;
    return avoids_two_row(pair_profile(a), p);
}

/// Placement of F in A: F's row r sits on A's row rows[r], F's column c on
/// A's column columns[c].
struct Witness {
    std::vector<int> rows;
    std::vector<std::size_t> columns;
};

/// Fast path for F(0,p,1,0), returning a placement when one exists.
inline std::optional<Witness> find_two_row(const BinaryMatrix& a, int p)
{
    if (avoids_two_row(a, p))
        return std::nullopt;
    const auto profile = pair_profile(a);
    for (int top = 0; top < a.rows(); ++top)
        for (int bottom = 0; bottom < a.rows(); ++bottom) {
            if (top == bottom)
                continue;
            // p columns [1 over 0] and one column [0 over 1] on (top, bottom)
            if (profile.n01(bottom, top) < p || profile.n01(top, bottom) < 1)
                continue;
            Witness w{{top, bottom}, {}};
            std::size_t single = a.cols();
            for (std::size_t c = 0; c < a.cols(); ++c) {
                bool t = a.at(top, c), b = a.at(bottom, c);
                if (t && !b && w.columns.size() < static_cast<std::size_t>(p))
                    w.columns.push_back(c);
                else if (!t && b && single == a.cols())
                    single = c;
            }
            w.columns.push_back(single);
            return w;
        }
    throw std::logic_error("find_two_row: profile reports containment but no placement found");
}

/// General containment test F < A under row and column permutations.
///
/// Each ordered choice of F.rows() distinct rows of A is tried; the choice
/// works when every pattern occurs among A's restricted columns at least as
/// often as among F's columns.
inline std::optional<Witness> contains_general(const BinaryMatrix& a, const BinaryMatrix& f)
{
    const int k = f.rows();
    const int m = a.rows();
    if (k > m)
        return std::nullopt;
    if (k > 20)
        throw std::invalid_argument("contains_general: F has too many rows");
    if (f.cols() > a.cols())
        return std::nullopt;

    const std::size_t patterns = std::size_t{1} << k;
    std::vector<int> need(patterns, 0);
    for (ColumnMask c : f.columns())
        ++need[c];
    std::vector<ColumnMask> needed;
    for (std::size_t pat = 0; pat < patterns; ++pat)
        if (need[pat] > 0)
            needed.push_back(pat);

    std::vector<int> tuple;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    std::vector<int> have(patterns, 0);
    std::optional<Witness> found;

    auto try_tuple = [&]() -> bool {
        std::fill(have.begin(), have.end(), 0);
        for (ColumnMask c : a.columns())
            ++have[permute_bits(c, tuple)];
        for (ColumnMask pat : needed)
            if (have[pat] < need[pat])
                return false;
        Witness w{tuple, {}};
        std::vector<bool> taken(a.cols(), false);
        for (ColumnMask fc : f.columns())
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (!taken[c] && permute_bits(a.column(c), tuple) == fc) {
                    taken[c] = true;
                    w.columns.push_back(c);
                    break;
                }
        found = std::move(w);
        return true;
    };

    // Two-rowed F: visit ordered pairs with the most lopsided counts first.
    if (k == 2 && m >= 2) {
        const auto profile = pair_profile(a);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j)
                    pairs.emplace_back(i, j);
        std::stable_sort(pairs.begin(), pairs.end(), [&](auto x, auto y) {
            auto spread = [&](std::pair<int, int> q) {
                return std::abs(profile.n01(q.first, q.second) - profile.n01(q.second, q.first));
            };
            return spread(x) > spread(y);
        });
        for (auto [i, j] : pairs) {
            tuple = {i, j};
            if (try_tuple())
                return found;
        }
        return std::nullopt;
    }

    auto extend = [&](auto&& self) -> bool {
        if (static_cast<int>(tuple.size()) == k)
            return try_tuple();
        for (int r = 0; r < m; ++r) {
            if (used[static_cast<std::size_t>(r)])
                continue;
            used[static_cast<std::size_t>(r)] = true;
            tuple.push_back(r);
            if (self(self))
                return true;
            tuple.pop_back();
            used[static_cast<std::size_t>(r)] = false;
        }
        return false;
    };
    extend(extend);
    return found;
}

/// Dispatches to the fast path for F(0,p,1,0) and to the general test otherwise.
inline std::optional<Witness> find_configuration(const BinaryMatrix& a, const ForbiddenPattern& pattern)
{
    if (pattern.is_two_row())
        return find_two_row(a, pattern.p());
    return contains_general(a, pattern.expand());
}

inline bool avoids(const BinaryMatrix& a, const ForbiddenPattern& pattern)
{
    if (pattern.is_two_row())
        return avoids_two_row(a, pattern.p());
    return !contains_general(a, pattern.expand()).has_value();
}

} // namespace forbcfg

#endif // FORBCFG_CONFIG_CHECK_HPP
