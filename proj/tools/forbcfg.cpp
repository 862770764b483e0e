// forbcfg: command line front end for the forbcfg headers.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <forbcfg/forbcfg.hpp>
#include <forbcfg/report_json.hpp>

namespace {

using namespace forbcfg;

constexpr int kExitContains = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64; // EX_USAGE, also used for unreadable input
constexpr int kExitSoftware = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("forbcfg");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("FORB_LOG")) {
        const auto level = spdlog::level::from_str(env);
        // from_str maps unknown names to "off"; only accept real level names.
        if (level != spdlog::level::off || std::string(env) == "off")
            spdlog::set_level(level);
        else
            spdlog::warn("FORB_LOG='{}' is not a level name; keeping 'warn'", env);
    }
}

BinaryMatrix read_matrix(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return from_text(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

ForbiddenPattern pattern_from(int p, const std::string& forbidden_file)
{
    if (!forbidden_file.empty())
        return ForbiddenPattern::general(read_matrix(forbidden_file));
    if (p < 1)
        throw UsageError("give --p P or --forbidden FILE");
    return ForbiddenPattern::two_row(p);
}

void print_witness(const Witness& w)
{
    std::cout << "rows:";
    for (int r : w.rows)
        std::cout << ' ' << r;
    std::cout << "\ncolumns:";
    for (std::size_t c : w.columns)
        std::cout << ' ' << c;
    std::cout << '\n';
}

void print_report(const GraphReport& g)
{
    std::cout << "m " << g.m << ", p " << g.p << ", " << g.source.cols() << " columns\n";
    std::cout << "components:\n";
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        const auto cost = component_cost(g, c);
        std::cout << "  [" << c << "] rows {";
        for (std::size_t k = 0; k < g.components[c].size(); ++k)
            std::cout << (k ? "," : "") << g.components[c][k];
        std::cout << "} clique=" << (g.cliques[c] ? "yes" : "no") << " block=" << g.blocks[c].matrix.cols()
                  << " cost=" << (cost.cost ? to_string(*cost.cost) : std::string("n/a (deletion not simple)"))
                  << '\n';
    }
    if (g.order) {
        std::cout << "order:";
        for (std::size_t c : *g.order)
            std::cout << ' ' << c;
        std::cout << '\n';
    } else {
        std::cout << "order: none, directed cycle through components";
        for (std::size_t c : g.cycle)
            std::cout << ' ' << c;
        std::cout << '\n';
    }
    std::cout << "D(A) transitive: " << (is_transitive(g) ? "yes" : "no") << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();

    CLI::App app{"Forbidden configuration F(0,p,1,0) toolkit"};
    app.require_subcommand(1);
    unsigned jobs = 1;
    app.add_option("--jobs", jobs, "Search worker threads (1 gives reproducible output)")
        ->check(CLI::Range(1u, 256u));

    // forb
    auto* forb = app.add_subcommand("forb", "forb(m,F) by exhaustive branch and bound");
    int rows = 0, p = 0;
    std::string forbidden, witness_out;
    double budget = 300.0;
    bool enumerate = false;
    int symmetry_depth = 2;
    forb->add_option("--rows,-m", rows, "Number of rows m")->required();
    forb->add_option("--p", p, "Forbid F(0,p,1,0)");
    forb->add_option("--forbidden", forbidden, "Forbid the matrix in this file instead");
    forb->add_option("--budget", budget, "Time budget in seconds");
    forb->add_option("--witness", witness_out, "Write the best matrix found to this file");
    forb->add_flag("--enumerate", enumerate, "Also list Ext(m,F) up to isomorphism");
    forb->add_option("--symmetry-depth", symmetry_depth, "Depth of row-permutation pruning");

    // check
    auto* check = app.add_subcommand("check", "Test whether a matrix avoids F");
    std::string matrix_file;
    check->add_option("matrix", matrix_file, "Matrix file ('-' for stdin)")->required();
    check->add_option("--p", p, "Forbid F(0,p,1,0)");
    check->add_option("--forbidden", forbidden, "Forbid the matrix in this file instead");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Row graph, components and costs");
    bool json = false;
    analyze->add_option("matrix", matrix_file, "Matrix file ('-' for stdin)")->required();
    analyze->add_option("--p", p, "Forbid F(0,p,1,0)")->required();
    analyze->add_flag("--json", json, "Print the JSON report");

    // construct
    auto* construct = app.add_subcommand("construct", "Print a built-in construction");
    std::string variant, out_file;
    construct->add_option("--p", p, "p in 2..9")->required();
    construct->add_option("--rows,-m", rows, "Number of rows m")->required();
    construct->add_option("--variant", variant, "Repeat this named block instead of the extremal plan");
    construct->add_option("--out", out_file, "Output file");
    bool compact = false;
    construct->add_flag("--compact", compact, "Print the 'm; hex,...' form");

    // bound
    auto* bound = app.add_subcommand("bound", "floor(c_p m)+1 with its status");
    bound->add_option("--p", p, "p in 2..9")->required();
    bound->add_option("--rows,-m", rows, "Number of rows m")->required();

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Ext(m,F) up to row and column permutation");
    enumerate_cmd->add_option("--rows,-m", rows, "Number of rows m")->required();
    enumerate_cmd->add_option("--p", p, "Forbid F(0,p,1,0)");
    enumerate_cmd->add_option("--forbidden", forbidden, "Forbid the matrix in this file instead");
    enumerate_cmd->add_option("--budget", budget, "Time budget in seconds");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Most columns with every row pair differing in <= t places");
    int k = 0, t = 0;
    oracle->add_option("--k", k, "Rows")->required();
    oracle->add_option("--t", t, "Difference limit")->required();
    oracle->add_option("--budget", budget, "Time budget in seconds");

    // reproduce
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Run the acceptance table");
    double long_budget = 3600.0;
    reproduce_cmd->add_option("--budget", budget, "Budget per search row, seconds");
    reproduce_cmd->add_option("--long-budget", long_budget, "Budget for the m=6 row, seconds");

    // conjecture-block
    auto* conj = app.add_subcommand("conjecture-block", "K_t minus the all-ones column");
    conj->add_option("--t", t, "t >= 2")->required();
    conj->add_option("--rows,-m", rows, "Also print the conjectured forb value for m rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        SearchOptions so;
        so.budget_seconds = budget;
        so.jobs = jobs;
        so.symmetry_depth = symmetry_depth;

        if (*forb) {
            const auto pattern = pattern_from(p, forbidden);
            spdlog::info("searching forb({}, {}) with budget {} s, {} job(s)", rows, pattern.describe(), budget, jobs);
            const auto r = forb_search(rows, pattern, so);
            spdlog::info("{} nodes in {:.3f} s", r.nodes, r.elapsed_seconds);
            std::cout << "forb(" << rows << ", " << pattern.describe() << ") "
                      << (r.optimal ? "= " : ">= ") << r.value << '\n';
            std::cout << (r.optimal ? "optimal" : "budget expired") << '\n';
            std::cout << "nodes " << r.nodes << '\n';
            if (!witness_out.empty())
                write_text(witness_out, to_text(r.witness));
            if (enumerate && r.optimal) {
                const auto e = enumerate_extremal(rows, pattern, so);
                std::cout << "classes " << e.classes.size() << (e.exhaustive ? "" : " (partial)") << '\n';
                for (const auto& c : e.classes)
                    std::cout << to_compact(c) << '\n';
                if (!e.exhaustive)
                    return kExitBudget;
            }
            return r.optimal ? 0 : kExitBudget;
        }

        if (*check) {
            const auto pattern = pattern_from(p, forbidden);
            const auto a = read_matrix(matrix_file);
            const auto w = find_configuration(a, pattern);
            if (!w) {
                std::cout << "avoids " << pattern.describe() << '\n';
                return 0;
            }
            std::cout << "contains " << pattern.describe() << '\n';
            print_witness(*w);
            return kExitContains;
        }

        if (*analyze) {
            const auto a = read_matrix(matrix_file);
            try {
                const auto g = build_graph(a, p);
                if (json)
                    std::cout << report_to_json(g).dump(2) << '\n';
                else
                    print_report(g);
                return 0;
            } catch (const PatternContainedError& e) {
                std::cout << "contains F(0," << p << ",1,0)\n";
                print_witness(e.witness());
                return kExitContains;
            }
        }

        if (*construct) {
            BinaryMatrix a;
            if (variant.empty()) {
                a = builtin_extremal(p, rows);
            } else {
                const auto block = builtin_block(p, variant);
                if (rows % block.rows() != 0)
                    throw UsageError("--rows must be a multiple of " + std::to_string(block.rows()) +
                                     " for variant '" + variant + "'");
                a = assemble(ConstructionPlan{p, std::vector<BlockLibraryEntry>(
                                                     static_cast<std::size_t>(rows / block.rows()), block)});
            }
            spdlog::info("{} rows, {} columns", a.rows(), a.cols());
            write_text(out_file, compact ? to_compact(a) + "\n" : to_text(a));
            return 0;
        }

        if (*bound) {
            const auto b = forb_bound(p, rows);
            std::cout << "value " << b.value << '\n';
            std::cout << "status " << to_string(b.status) << '\n';
            std::cout << "c_p " << to_string(cp(p)) << '\n';
            return 0;
        }

        if (*enumerate_cmd) {
            const auto pattern = pattern_from(p, forbidden);
            const auto e = enumerate_extremal(rows, pattern, so);
            std::cout << "forb " << e.value << '\n';
            std::cout << "classes " << e.classes.size() << (e.exhaustive ? "" : " (partial)") << '\n';
            for (const auto& c : e.classes)
                std::cout << to_compact(c) << '\n';
            return e.exhaustive ? 0 : kExitBudget;
        }

        if (*oracle) {
            const auto r = max_bounded_diff(k, t, so);
            std::cout << "max_bounded_diff(" << k << "," << t << ") " << (r.optimal ? "= " : ">= ") << r.value
                      << '\n';
            try {
                std::cout << "upper_bound_simple " << upper_bound_simple(k, t) << '\n';
            } catch (const FormulaNotApplicable& e) {
                std::cout << "upper_bound_simple n/a (" << e.what() << ")\n";
            }
            std::cout << "upper_bound_nonsimple " << upper_bound_nonsimple(k, t) << '\n';
            return r.optimal ? 0 : kExitBudget;
        }

        if (*reproduce_cmd) {
            ReproduceOptions ro;
            ro.search_budget = budget;
            ro.best_effort_budget = long_budget;
            ro.jobs = jobs;
            const auto table = reproduce(ro, [](const ReproRow& r) {
                std::cout << to_string(r.verdict) << "  [" << r.criterion << "] " << r.name << ": claimed "
                          << r.claimed << ", computed " << r.computed;
                if (!r.note.empty())
                    std::cout << "  (" << r.note << ")";
                std::cout << std::endl;
            });
            return all_passed(table) ? 0 : 1;
        }

        if (*conj) {
            const auto block = conjecture_block(t);
            // Matrix on stdout so it can be piped back in; notes on stderr.
            std::cerr << "p = " << block.p << ", " << block.rows() << " rows, " << block.columns()
                      << " columns (conjectural, not verified optimal)\n";
            std::cout << to_text(block.block);
            if (rows > 0)
                std::cerr << "conjectured forb(" << rows << ") = " << conjecture_bound(t, rows).value << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        spdlog::error("internal error: {}", e.what());
        return kExitSoftware;
    }
    return 0;
}
