#ifndef FORBCFG_ROW_GRAPH_HPP
#define FORBCFG_ROW_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "config_check.hpp"
#include "matrix.hpp"

namespace forbcfg {

/// Classification of an unordered row pair {i, j}, i < j, in G(A).
enum class EdgeClass {
    Undirected,       ///< 1 <= n01(i,j), n01(j,i) <= p-1
    DirectedForward,  ///< i -> j: no column with 0 in row i and 1 in row j
    DirectedBackward, ///< j -> i
    Duplicate,        ///< both counts zero: rows i and j are identical
};

inline const char* to_string(EdgeClass cls)
{
    switch (cls) {
    case EdgeClass::Undirected:
        return "undirected";
    case EdgeClass::DirectedForward:
        return "forward";
    case EdgeClass::DirectedBackward:
        return "backward";
    case EdgeClass::Duplicate:
        return "duplicate";
    }
    return "?";
}

inline EdgeClass classify_pair(int n01_ij, int n01_ji)
{
    if (n01_ij == 0 && n01_ji == 0)
        return EdgeClass::Duplicate;
    if (n01_ij == 0)
        return EdgeClass::DirectedForward;
    if (n01_ji == 0)
        return EdgeClass::DirectedBackward;
    return EdgeClass::Undirected;
}

struct Edge {
    int i = 0;
    int j = 0;
    EdgeClass cls = EdgeClass::Undirected;
};

/// B_i for one component: the columns of A that are non-constant on the
/// component's rows, plus the zero column when A has it.
struct ComponentBlock {
    std::vector<int> rows;                  ///< ascending row indices of A
    std::vector<std::size_t> source_columns; ///< columns of A forming the block
    bool has_zero_column = false;
    BinaryMatrix matrix;                    ///< the block restricted to `rows`
};

class PatternContainedError : public std::runtime_error {
public:
    explicit PatternContainedError(Witness w)
        : std::runtime_error("matrix contains the forbidden configuration"), witness_(std::move(w))
    {
    }
    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

struct GraphReport {
    int m = 0;
    int p = 0;
    BinaryMatrix source;
    std::vector<Edge> edges; ///< one per unordered pair, in (0,1), (0,2), ..., (m-2,m-1) order
    std::vector<std::vector<int>> components;
    std::vector<int> component_of; ///< row -> component index
    std::vector<bool> cliques;
    /// Topological order of components under D(A); empty when cyclic.
    std::optional<std::vector<std::size_t>> order;
    /// Components on a directed cycle, when `order` is absent.
    std::vector<std::size_t> cycle;
    std::vector<ComponentBlock> blocks; ///< indexed like `components`

    std::size_t pair_index(int i, int j) const
    {
        if (i > j)
            std::swap(i, j);
        // Pairs with smaller first index come before.
        return static_cast<std::size_t>(i * m - i * (i + 1) / 2 + (j - i - 1));
    }

    /// Edge class as seen from the ordered pair (i, j).
    EdgeClass edge(int i, int j) const
    {
        EdgeClass cls = edges[pair_index(i, j)].cls;
        if (i > j) {
            if (cls == EdgeClass::DirectedForward)
                return EdgeClass::DirectedBackward;
            if (cls == EdgeClass::DirectedBackward)
                return EdgeClass::DirectedForward;
        }
        return cls;
    }

    /// i -> j in D(A); identical rows point both ways.
    bool directed(int i, int j) const
    {
        EdgeClass cls = edge(i, j);
        return cls == EdgeClass::DirectedForward || cls == EdgeClass::Duplicate;
    }
};

namespace detail {

inline std::vector<std::vector<int>> undirected_components(int m, const std::vector<Edge>& edges)
{
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : edges)
        if (e.cls == EdgeClass::Undirected) {
            int a = find(e.i), b = find(e.j);
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::vector<std::vector<int>> components;
    std::vector<int> slot(static_cast<std::size_t>(m), -1);
    for (int r = 0; r < m; ++r) {
        int root = find(r);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(r);
    }
    return components; // ordered by smallest row, rows ascending
}

inline ColumnMask row_mask(const std::vector<int>& rows)
{
    ColumnMask mask = 0;
    for (int r : rows)
        mask |= ColumnMask{1} << r;
    return mask;
}

} // namespace detail

/// Builds G(A) for an A avoiding F(0,p,1,0).
///
/// Throws PatternContainedError (carrying a placement) if A contains the
/// configuration. A cyclic component digraph is reported through
/// `report.cycle` rather than thrown.
inline GraphReport build_graph(const BinaryMatrix& a, int p)
{
    if (p < 1)
        throw std::invalid_argument("build_graph: p must be >= 1");
    if (auto w = find_two_row(a, p))
        throw PatternContainedError(std::move(*w));

    GraphReport report;
    report.m = a.rows();
    report.p = p;
    report.source = a;
    const int m = a.rows();

    if (m >= 2) {
        const auto profile = pair_profile(a);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                report.edges.push_back({i, j, classify_pair(profile.n01(i, j), profile.n01(j, i))});
    }

    report.components = detail::undirected_components(m, report.edges);
    const std::size_t t = report.components.size();
    report.component_of.assign(static_cast<std::size_t>(m), 0);
    for (std::size_t c = 0; c < t; ++c)
        for (int r : report.components[c])
            report.component_of[static_cast<std::size_t>(r)] = static_cast<int>(c);

    for (const auto& comp : report.components) {
        bool clique = true;
        for (std::size_t x = 0; x < comp.size() && clique; ++x)
            for (std::size_t y = x + 1; y < comp.size(); ++y)
                if (report.edge(comp[x], comp[y]) != EdgeClass::Undirected) {
                    clique = false;
                    break;
                }
        report.cliques.push_back(clique);
    }

    // Contracted digraph: component a -> component b when some row pair points that way.
    std::vector<std::vector<bool>> arc(t, std::vector<bool>(t, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j)
                continue;
            auto ci = static_cast<std::size_t>(report.component_of[static_cast<std::size_t>(i)]);
            auto cj = static_cast<std::size_t>(report.component_of[static_cast<std::size_t>(j)]);
            if (ci != cj && report.directed(i, j))
                arc[ci][cj] = true;
        }
    std::vector<int> indegree(t, 0);
    for (std::size_t x = 0; x < t; ++x)
        for (std::size_t y = 0; y < t; ++y)
            if (arc[x][y])
                ++indegree[y];
    // Components are numbered by smallest row, so a min-heap on the index
    // breaks ties by smallest contained row.
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t x = 0; x < t; ++x)
        if (indegree[x] == 0)
            ready.push(x);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t x = ready.top();
        ready.pop();
        order.push_back(x);
        for (std::size_t y = 0; y < t; ++y)
            if (arc[x][y] && --indegree[y] == 0)
                ready.push(y);
    }
    if (order.size() == t) {
        report.order = order;
    } else {
        // Every leftover component has a leftover predecessor; walk back until a repeat.
        std::vector<int> seen(t, -1);
        std::vector<std::size_t> walk;
        std::size_t x = 0;
        while (indegree[x] == 0)
            ++x;
        while (seen[x] < 0) {
            seen[x] = static_cast<int>(walk.size());
            walk.push_back(x);
            std::size_t pred = 0;
            while (!(arc[pred][x] && indegree[pred] > 0))
                ++pred;
            x = pred;
        }
        report.cycle.assign(walk.begin() + seen[x], walk.end());
        std::reverse(report.cycle.begin(), report.cycle.end());
    }

    // Blocks.
    std::vector<ColumnMask> comp_mask(t);
    for (std::size_t c = 0; c < t; ++c)
        comp_mask[c] = detail::row_mask(report.components[c]);
    report.blocks.resize(t);
    for (std::size_t c = 0; c < t; ++c)
        report.blocks[c].rows = report.components[c];

    for (std::size_t col = 0; col < a.cols(); ++col) {
        const ColumnMask value = a.column(col);
        int nonconstant_on = 0;
        for (std::size_t c = 0; c < t; ++c) {
            const ColumnMask part = value & comp_mask[c];
            if (part != 0 && part != comp_mask[c]) {
                ++nonconstant_on;
                report.blocks[c].source_columns.push_back(col);
            }
        }
        if (report.order && nonconstant_on > 1)
            throw std::logic_error("build_graph: column " + std::to_string(col) +
                                   " is non-constant on two components of an ordered G(A)");
    }

    for (std::size_t c = 0; c < t; ++c) {
        std::optional<std::size_t> zero;
        if (report.order) {
            // Ones on earlier components, zeros from this component on.
            ColumnMask expected = 0;
            for (std::size_t pos = 0; pos < t && (*report.order)[pos] != c; ++pos)
                expected |= comp_mask[(*report.order)[pos]];
            for (std::size_t col = 0; col < a.cols() && !zero; ++col)
                if (a.column(col) == expected)
                    zero = col;
        } else {
            for (std::size_t col = 0; col < a.cols() && !zero; ++col)
                if ((a.column(col) & comp_mask[c]) == 0)
                    zero = col;
        }
        auto& block = report.blocks[c];
        if (zero) {
            block.has_zero_column = true;
            block.source_columns.push_back(*zero);
            std::sort(block.source_columns.begin(), block.source_columns.end());
        }
        std::vector<ColumnMask> columns;
        for (std::size_t col : block.source_columns)
            columns.push_back(permute_bits(a.column(col), block.rows));
        block.matrix = BinaryMatrix(static_cast<int>(block.rows.size()), std::move(columns));
    }
    return report;
}

/// i -> j and j -> k imply i -> k, over all row triples.
inline bool is_transitive(const GraphReport& report)
{
    for (int i = 0; i < report.m; ++i)
        for (int j = 0; j < report.m; ++j) {
            if (j == i || !report.directed(i, j))
                continue;
            for (int k = 0; k < report.m; ++k)
                if (k != i && k != j && report.directed(j, k) && !report.directed(i, k))
                    return false;
        }
    return true;
}

inline bool is_clique(const GraphReport& report, std::size_t component)
{
    if (component >= report.components.size())
        throw std::out_of_range("is_clique: component " + std::to_string(component) + " of " +
                                std::to_string(report.components.size()));
    return report.cliques[component];
}

/// Rebuilds A from its blocks in the block-triangular shape: each block on
/// its rows, ones on earlier components, zeros on later ones, and a final
/// all-ones column. Requires an ordered report.
inline BinaryMatrix reassemble(const GraphReport& report)
{
    if (!report.order)
        throw std::invalid_argument("reassemble: component digraph is cyclic");
    std::vector<ColumnMask> columns;
    ColumnMask above = 0;
    for (std::size_t c : *report.order) {
        const auto& block = report.blocks[c];
        for (ColumnMask local : block.matrix.columns()) {
            ColumnMask global = above;
            for (std::size_t r = 0; r < block.rows.size(); ++r)
                if ((local >> r) & 1U)
                    global |= ColumnMask{1} << block.rows[r];
            columns.push_back(global);
        }
        above |= detail::row_mask(block.rows);
    }
    columns.push_back(all_ones_mask(report.m));
    return BinaryMatrix(report.m, std::move(columns));
}

} // namespace forbcfg

#endif // FORBCFG_ROW_GRAPH_HPP
