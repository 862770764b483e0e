#ifndef FORBCFG_BOUNDS_HPP
#define FORBCFG_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

#include "row_graph.hpp"

namespace forbcfg {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::int64_t floor(const Rational& q)
{
    std::int64_t n = q.numerator(), d = q.denominator();
    std::int64_t f = n / d;
    if ((n % d != 0) && (n < 0))
        --f;
    return f;
}

/// Columns per row of the best known block for F(0,p,1,0).
inline Rational cp(int p)
{
    switch (p) {
    case 2:
        return {3, 2};
    case 3:
        return {7, 3};
    case 4:
        return {11, 4};
    case 5:
        return {15, 4};
    case 6:
        return {21, 5};
    case 7:
        return {24, 5};
    case 8:
        return {27, 5};
    case 9:
        return {31, 5};
    default:
        throw std::out_of_range("c_p is tabulated for 2 <= p <= 9, got p=" + std::to_string(p));
    }
}

/// floor(tk/2): most columns of a k-rowed matrix without constant columns
/// whose row pairs each differ in at most t columns.
inline std::int64_t upper_bound_nonsimple(int k, int t)
{
    if (k < 2 || t < 0)
        throw std::invalid_argument("upper_bound_nonsimple needs k >= 2 and t >= 0");
    return static_cast<std::int64_t>(t) * k / 2;
}

class FormulaNotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Largest t the simple-matrix bound is stated for: columns of sum 2 and
/// k-2 are exhausted beyond it.
inline int simple_bound_t_limit(int k) { return 2 * (k * (k - 1) / 2 + k); }

/// floor(2k + (t-4)k(k-1) / (4(k-2))) for a simple k-rowed matrix without
/// constant columns and at most t differences per row pair.
inline std::int64_t upper_bound_simple(int k, int t)
{
    if (k < 3)
        throw FormulaNotApplicable("upper_bound_simple: formula not applicable for k=" + std::to_string(k) +
                                   " (needs k >= 3)");
    if (t < 4 || t > simple_bound_t_limit(k))
        throw FormulaNotApplicable("upper_bound_simple: formula not applicable for t=" + std::to_string(t) +
                                   " (valid window for k=" + std::to_string(k) + " is [4, " +
                                   std::to_string(simple_bound_t_limit(k)) + "])");
    const std::int64_t kk = k;
    const Rational value = Rational(2 * kk) + Rational((t - 4) * kk * (kk - 1), 4 * (kk - 2));
    return floor(value);
}

struct CostReport {
    std::size_t component = 0;
    int rows = 0;             ///< s = |C|
    std::size_t columns = 0;  ///< t = ||B||
    bool deletion_simple = false;
    std::optional<Rational> cost; ///< c_p*s - t, present only when the deletion leaves a simple matrix
};

/// Cost of deleting a component's rows together with its block columns.
inline CostReport component_cost(const GraphReport& report, std::size_t component)
{
    if (component >= report.components.size())
        throw std::out_of_range("component_cost: no component " + std::to_string(component));
    const auto& block = report.blocks[component];
    CostReport out;
    out.component = component;
    out.rows = static_cast<int>(block.rows.size());
    out.columns = block.source_columns.size();

    std::vector<bool> drop_row(static_cast<std::size_t>(report.m), false);
    for (int r : block.rows)
        drop_row[static_cast<std::size_t>(r)] = true;
    std::vector<int> keep_rows;
    for (int r = 0; r < report.m; ++r)
        if (!drop_row[static_cast<std::size_t>(r)])
            keep_rows.push_back(r);
    std::vector<bool> drop_col(report.source.cols(), false);
    for (std::size_t c : block.source_columns)
        drop_col[c] = true;

    std::vector<ColumnMask> remaining;
    for (std::size_t c = 0; c < report.source.cols(); ++c)
        if (!drop_col[c])
            remaining.push_back(permute_bits(report.source.column(c), keep_rows));
    if (keep_rows.empty()) {
        out.deletion_simple = remaining.size() <= 1;
    } else {
        out.deletion_simple = BinaryMatrix(static_cast<int>(keep_rows.size()), remaining).is_simple();
    }
    if (out.deletion_simple)
        out.cost = cp(report.p) * Rational(out.rows) - Rational(static_cast<std::int64_t>(out.columns));
    return out;
}

inline CostReport component_cost(const BinaryMatrix& a, int p, std::size_t component)
{
    return component_cost(build_graph(a, p), component);
}

enum class BoundStatus {
    Exact,
    UpperBoundProven,
    ConstructionLowerBoundOnly,
};

inline const char* to_string(BoundStatus s)
{
    switch (s) {
    case BoundStatus::Exact:
        return "exact";
    case BoundStatus::UpperBoundProven:
        return "upper-bound-proven";
    case BoundStatus::ConstructionLowerBoundOnly:
        return "construction-lower-bound-only";
    }
    return "?";
}

struct ForbBound {
    std::int64_t value = 0;
    BoundStatus status = BoundStatus::UpperBoundProven;
};

/// floor(c_p m) + 1 together with how strongly it is established.
inline ForbBound forb_bound(int p, int m)
{
    const Rational c = cp(p);
    if (m < 2)
        throw std::invalid_argument("forb_bound: m must be >= 2");
    ForbBound out{floor(c * Rational(m)) + 1, BoundStatus::UpperBoundProven};
    switch (p) {
    case 2:
    case 4:
    case 5:
        out.status = BoundStatus::ConstructionLowerBoundOnly;
        break;
    case 3:
        out.status = m >= 3 ? BoundStatus::Exact : BoundStatus::UpperBoundProven;
        break;
    case 6:
        if (m % 5 == 0) {
            out.status = BoundStatus::Exact;
        } else if (m % 5 == 1 && m >= 6) {
            out.value -= 1;
            out.status = BoundStatus::Exact;
        }
        break;
    default: // 7, 8, 9: equality proven only for m = 0 mod 5
        if (m % 5 == 0)
            out.status = BoundStatus::Exact;
        break;
    }
    return out;
}

struct ConjectureBound {
    std::int64_t value = 0;
    std::int64_t p = 0; ///< 2^(t-2) + 1
};

/// floor((2^t - 1) m / t) + 1 for F(0, 2^(t-2)+1, 1, 0). Conjectural.
inline ConjectureBound conjecture_bound(int t, int m)
{
    if (t < 2 || t > 40)
        throw std::invalid_argument("conjecture_bound: t must be in [2, 40]");
    if (m < 1)
        throw std::invalid_argument("conjecture_bound: m must be >= 1");
    const std::int64_t top = (std::int64_t{1} << t) - 1;
    return {floor(Rational(top * m, t)) + 1, (std::int64_t{1} << (t - 2)) + 1};
}

} // namespace forbcfg

#endif // FORBCFG_BOUNDS_HPP
