#ifndef FORBCFG_MATRIX_HPP
#define FORBCFG_MATRIX_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace forbcfg {

/// One column of a (0,1)-matrix: bit r holds the entry in row r.
using ColumnMask = std::uint64_t;

inline int weight(ColumnMask c) { return std::popcount(c); }

constexpr ColumnMask all_ones_mask(int rows)
{
    return rows >= 64 ? ~ColumnMask{0} : ((ColumnMask{1} << rows) - 1);
}

/// Thrown by the text readers; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An m-rowed (0,1)-matrix stored column by column.
///
/// Columns form a multiset semantically: storage order is kept, but every
/// predicate in this library is invariant under column reordering.
/// Repeated columns are allowed; simplicity is a query, not an invariant.
class BinaryMatrix {
public:
    static constexpr int kMaxRows = 63;

    BinaryMatrix() = default;

    explicit BinaryMatrix(int rows, std::vector<ColumnMask> columns = {})
        : rows_(rows), columns_(std::move(columns))
    {
        if (rows < 1 || rows > kMaxRows)
            throw std::invalid_argument("row count must be in [1, 63], got " + std::to_string(rows));
        const ColumnMask full = all_ones_mask(rows);
        for (ColumnMask c : columns_)
            if ((c & ~full) != 0)
                throw std::invalid_argument("column mask has bits beyond row " + std::to_string(rows - 1));
    }

    int rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::span<const ColumnMask> columns() const { return columns_; }
    ColumnMask column(std::size_t c) const { return columns_.at(c); }
    bool at(int r, std::size_t c) const { return (columns_.at(c) >> r) & 1U; }

    bool is_simple() const
    {
        std::vector<ColumnMask> sorted(columns_);
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    /// Column masks in ascending order; equal for matrices that differ only in column order.
    std::vector<ColumnMask> sorted_columns() const
    {
        std::vector<ColumnMask> sorted(columns_);
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    }

    bool same_columns_as(const BinaryMatrix& other) const
    {
        return rows_ == other.rows_ && sorted_columns() == other.sorted_columns();
    }

    bool contains_column(ColumnMask c) const
    {
        return std::find(columns_.begin(), columns_.end(), c) != columns_.end();
    }

    /// Storage equality (row count and column sequence).
    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 1;
    std::vector<ColumnMask> columns_;
};

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size())
            break;
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    return lines;
}

inline long parse_int(std::string_view token, std::size_t line, std::size_t column)
{
    if (token.empty())
        throw ParseError(line, column, "expected an integer");
    long value = 0;
    for (std::size_t k = 0; k < token.size(); ++k) {
        char ch = token[k];
        if (ch < '0' || ch > '9')
            throw ParseError(line, column + k, std::string("illegal character '") + ch + "' in integer");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000'000)
            throw ParseError(line, column, "integer too large");
    }
    return value;
}

inline BinaryMatrix parse_compact(std::string_view text)
{
    // "m; h1,h2,..." with hexadecimal column masks.
    std::size_t semi = text.find(';');
    std::string_view head = text.substr(0, semi);
    while (!head.empty() && head.front() == ' ')
        head.remove_prefix(1);
    while (!head.empty() && head.back() == ' ')
        head.remove_suffix(1);
    long m = parse_int(head, 1, 1);
    if (m < 1 || m > BinaryMatrix::kMaxRows)
        throw ParseError(1, 1, "row count out of range");
    std::vector<ColumnMask> columns;
    std::size_t pos = semi + 1;
    const ColumnMask full = all_ones_mask(static_cast<int>(m));
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        std::size_t col = pos + 1;
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\n' || tok.front() == '\r')) {
            tok.remove_prefix(1);
            ++col;
        }
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\n' || tok.back() == '\r'))
            tok.remove_suffix(1);
        if (tok.starts_with("0x") || tok.starts_with("0X"))
            tok.remove_prefix(2);
        if (tok.empty()) {
            if (comma == text.size() && columns.empty())
                break;
            throw ParseError(1, col, "empty column token");
        }
        ColumnMask value = 0;
        for (std::size_t k = 0; k < tok.size(); ++k) {
            char ch = tok[k];
            int digit;
            if (ch >= '0' && ch <= '9')
                digit = ch - '0';
            else if (ch >= 'a' && ch <= 'f')
                digit = ch - 'a' + 10;
            else if (ch >= 'A' && ch <= 'F')
                digit = ch - 'A' + 10;
            else
                throw ParseError(1, col + k, std::string("illegal hex digit '") + ch + "'");
            if (value >> 60)
                throw ParseError(1, col, "column mask overflows 64 bits");
            value = (value << 4) | static_cast<ColumnMask>(digit);
        }
        if ((value & ~full) != 0)
            throw ParseError(1, col, "column mask exceeds row count");
        columns.push_back(value);
        pos = comma + 1;
    }
    return BinaryMatrix(static_cast<int>(m), std::move(columns));
}

} // namespace detail

/// Reads the grid format ("m n" header, then m lines of n characters in
/// {0,1}; line r is row r) or the compact form "m; h1,h2,..." with
/// hexadecimal column masks.
inline BinaryMatrix from_text(std::string_view text)
{
    auto lines = detail::split_lines(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty input");
    if (lines.front().find(';') != std::string_view::npos)
        return detail::parse_compact(text);

    std::string_view header = lines.front();
    std::size_t space = header.find_first_of(" \t");
    if (space == std::string_view::npos)
        throw ParseError(1, header.size() + 1, "header must be \"m n\"");
    std::size_t second = header.find_first_not_of(" \t", space);
    long m = detail::parse_int(header.substr(0, space), 1, 1);
    long n = detail::parse_int(header.substr(second), 1, second + 1);
    if (m < 1 || m > BinaryMatrix::kMaxRows)
        throw ParseError(1, 1, "row count must be in [1, 63]");

    std::vector<ColumnMask> columns(static_cast<std::size_t>(n), 0);
    // n == 0 allows the m empty row lines to be omitted.
    if (n > 0 && lines.size() < static_cast<std::size_t>(m) + 1)
        throw ParseError(lines.size() + 1, 1, "expected " + std::to_string(m) + " rows, found " +
                                                  std::to_string(lines.size() - 1));
    if (lines.size() > static_cast<std::size_t>(m) + 1)
        throw ParseError(static_cast<std::size_t>(m) + 2, 1, "trailing data after " + std::to_string(m) + " rows");
    for (long r = 0; r < m && n > 0; ++r) {
        std::string_view row = lines[static_cast<std::size_t>(r) + 1];
        const std::size_t line_no = static_cast<std::size_t>(r) + 2;
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError(line_no, std::min(row.size(), static_cast<std::size_t>(n)) + 1,
                             "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
        for (long c = 0; c < n; ++c) {
            char ch = row[static_cast<std::size_t>(c)];
            if (ch == '1')
                columns[static_cast<std::size_t>(c)] |= ColumnMask{1} << r;
            else if (ch != '0')
                throw ParseError(line_no, static_cast<std::size_t>(c) + 1,
                                 std::string("illegal character '") + ch + "'");
        }
    }
    return BinaryMatrix(static_cast<int>(m), std::move(columns));
}

/// Grid format, newline terminated.
inline std::string to_text(const BinaryMatrix& a)
{
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (int r = 0; r < a.rows(); ++r) {
        for (ColumnMask c : a.columns())
            out += ((c >> r) & 1U) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline std::string to_compact(const BinaryMatrix& a)
{
    std::ostringstream out;
    out << a.rows() << ';';
    const char* sep = " ";
    for (ColumnMask c : a.columns()) {
        out << sep << std::hex << c << std::dec;
        sep = ",";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Standard matrices
// ---------------------------------------------------------------------------

/// K_k: all 2^k columns on k rows, ascending by mask.
inline BinaryMatrix k_full(int k)
{
    if (k < 1 || k > 20)
        throw std::invalid_argument("k_full: k must be in [1, 20], got " + std::to_string(k));
    std::vector<ColumnMask> columns(std::size_t{1} << k);
    std::iota(columns.begin(), columns.end(), ColumnMask{0});
    return BinaryMatrix(k, std::move(columns));
}

/// K_k^s: every weight-s column on k rows, ascending by mask.
inline BinaryMatrix k_slice(int k, int s)
{
    if (k < 1 || k > 20)
        throw std::invalid_argument("k_slice: k must be in [1, 20], got " + std::to_string(k));
    if (s < 0 || s > k)
        throw std::invalid_argument("k_slice: s must be in [0, k], got " + std::to_string(s));
    std::vector<ColumnMask> columns;
    for (ColumnMask c = 0; c < (ColumnMask{1} << k); ++c)
        if (weight(c) == s)
            columns.push_back(c);
    return BinaryMatrix(k, std::move(columns));
}

/// I_k: the k weight-one columns, column r has its 1 in row r.
inline BinaryMatrix identity(int k)
{
    std::vector<ColumnMask> columns;
    for (int r = 0; r < k; ++r)
        columns.push_back(ColumnMask{1} << r);
    return BinaryMatrix(k, std::move(columns));
}

inline BinaryMatrix complement(const BinaryMatrix& a)
{
    const ColumnMask full = all_ones_mask(a.rows());
    std::vector<ColumnMask> columns;
    columns.reserve(a.cols());
    for (ColumnMask c : a.columns())
        columns.push_back(~c & full);
    return BinaryMatrix(a.rows(), std::move(columns));
}

inline BinaryMatrix concat(const BinaryMatrix& a, const BinaryMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("concat: row counts differ (" + std::to_string(a.rows()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    std::vector<ColumnMask> columns(a.columns().begin(), a.columns().end());
    columns.insert(columns.end(), b.columns().begin(), b.columns().end());
    return BinaryMatrix(a.rows(), std::move(columns));
}

template <class... Rest>
BinaryMatrix concat(const BinaryMatrix& a, const BinaryMatrix& b, const Rest&... rest)
{
    return concat(concat(a, b), rest...);
}

/// Row r of the result is row perm[r] of the input.
inline ColumnMask permute_bits(ColumnMask c, std::span<const int> perm)
{
    ColumnMask out = 0;
    for (std::size_t r = 0; r < perm.size(); ++r)
        out |= ((c >> perm[r]) & 1U) << r;
    return out;
}

inline BinaryMatrix permute_rows(const BinaryMatrix& a, std::span<const int> perm)
{
    if (perm.size() != static_cast<std::size_t>(a.rows()))
        throw std::invalid_argument("permute_rows: permutation size mismatch");
    std::vector<ColumnMask> columns;
    columns.reserve(a.cols());
    for (ColumnMask c : a.columns())
        columns.push_back(permute_bits(c, perm));
    return BinaryMatrix(a.rows(), std::move(columns));
}

inline BinaryMatrix permute_columns(const BinaryMatrix& a, std::span<const std::size_t> order)
{
    std::vector<ColumnMask> columns;
    columns.reserve(order.size());
    for (std::size_t c : order)
        columns.push_back(a.column(c));
    return BinaryMatrix(a.rows(), std::move(columns));
}

/// A_S: the submatrix on the given rows, in the given order.
inline BinaryMatrix restrict_rows(const BinaryMatrix& a, std::span<const int> rows)
{
    return BinaryMatrix(static_cast<int>(rows.size()), [&] {
        std::vector<ColumnMask> columns;
        columns.reserve(a.cols());
        for (ColumnMask c : a.columns())
            columns.push_back(permute_bits(c, rows));
        return columns;
    }());
}

inline constexpr int kCanonicalRowLimit = 10;

/// The lexicographically least sorted column sequence over all row
/// permutations. Two matrices are equal up to row and column permutation
/// iff their canonical forms are equal.
inline BinaryMatrix canonical_form(const BinaryMatrix& a)
{
    const int m = a.rows();
    if (m > kCanonicalRowLimit)
        throw std::invalid_argument("canonical_form: refused for " + std::to_string(m) + " rows (limit " +
                                    std::to_string(kCanonicalRowLimit) + ")");
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<ColumnMask> best = a.sorted_columns();
    std::vector<ColumnMask> current(a.cols());
    do {
        for (std::size_t c = 0; c < a.cols(); ++c)
            current[c] = permute_bits(a.column(c), perm);
        std::sort(current.begin(), current.end());
        if (current < best)
            best = current;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BinaryMatrix(m, std::move(best));
}

inline bool isomorphic(const BinaryMatrix& a, const BinaryMatrix& b)
{
    return a.rows() == b.rows() && a.cols() == b.cols() && canonical_form(a) == canonical_form(b);
}

} // namespace forbcfg

#endif // FORBCFG_MATRIX_HPP
