// Builds the p=6 extremal matrix on 10 rows, checks it, and shows its row
// graph. Then confirms forb(5, F(0,6,1,0)) by search.

#include <iostream>

#include <forbcfg/forbcfg.hpp>

int main()
{
    using namespace forbcfg;

    const BinaryMatrix a = builtin_extremal(6, 10);
    std::cout << "builtin_extremal(6, 10): " << a.cols() << " columns, avoids F(0,6,1,0): "
              << (avoids_two_row(a, 6) ? "yes" : "no") << '\n';

    const auto bound = forb_bound(6, 10);
    std::cout << "forb_bound(6, 10) = " << bound.value << " (" << to_string(bound.status) << ")\n";

    const GraphReport g = build_graph(a, 6);
    for (std::size_t c = 0; c < g.components.size(); ++c)
        std::cout << "component " << c << ": " << g.components[c].size() << " rows, cost "
                  << to_string(*component_cost(g, c).cost) << '\n';

    // Adding any further column creates the configuration.
    const auto extra = BinaryMatrix(10, {0b0000100001});
    const auto bigger = concat(a, extra);
    if (auto w = find_two_row(bigger, 6))
        std::cout << "with one more column: F(0,6,1,0) on rows " << w->rows[0] << ", " << w->rows[1] << '\n';

    SearchOptions options;
    options.budget_seconds = 60;
    const auto r = forb_search(5, ForbiddenPattern::two_row(6), options);
    std::cout << "forb(5, F(0,6,1,0)) = " << r.value << (r.optimal ? " (optimal)" : " (budget expired)") << '\n';
    std::cout << to_text(r.witness);
}
