#ifndef FORBCFG_REPORT_JSON_HPP
#define FORBCFG_REPORT_JSON_HPP

// Needs nlohmann/json (vendor/json.hpp) on the include path.

#include <json.hpp>

#include "bounds.hpp"
#include "row_graph.hpp"

namespace forbcfg {

/// {"m", "p", "edges": [{"i", "j", "class"}], "components", "cliques",
///  "order", "costs"}; "order" is null for a cyclic component digraph and a
/// cost is null when deleting the component leaves a non-simple matrix.
inline nlohmann::json report_to_json(const GraphReport& report)
{
    using nlohmann::json;
    json out;
    out["m"] = report.m;
    out["p"] = report.p;
    json edges = json::array();
    for (const auto& e : report.edges)
        edges.push_back({{"i", e.i}, {"j", e.j}, {"class", to_string(e.cls)}});
    out["edges"] = std::move(edges);
    out["components"] = report.components;
    json cliques = json::array();
    for (bool c : report.cliques)
        cliques.push_back(c);
    out["cliques"] = std::move(cliques);
    if (report.order)
        out["order"] = *report.order;
    else
        out["order"] = nullptr;
    json costs = json::array();
    for (std::size_t c = 0; c < report.components.size(); ++c) {
        const auto cost = component_cost(report, c).cost;
        if (cost)
            costs.push_back(to_string(*cost));
        else
            costs.push_back(nullptr);
    }
    out["costs"] = std::move(costs);
    if (!report.order)
        out["cycle"] = report.cycle;
    return out;
}

/// Structural check of a JSON report against the schema above.
inline bool report_json_valid(const nlohmann::json& j, std::string* why = nullptr)
{
    auto fail = [&](const char* msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (!j.is_object())
        return fail("report is not an object");
    for (const char* key : {"m", "p", "edges", "components", "cliques", "order", "costs"})
        if (!j.contains(key))
            return fail("missing key");
    if (!j["m"].is_number_integer() || !j["p"].is_number_integer())
        return fail("m and p must be integers");
    const int m = j["m"].get<int>();
    if (!j["edges"].is_array() || j["edges"].size() != static_cast<std::size_t>(m * (m - 1) / 2))
        return fail("edges must list every row pair");
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("class"))
            return fail("edge needs i, j, class");
        const auto cls = e["class"].get<std::string>();
        if (cls != "undirected" && cls != "forward" && cls != "backward" && cls != "duplicate")
            return fail("unknown edge class");
    }
    const auto& comps = j["components"];
    if (!comps.is_array())
        return fail("components must be an array");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (const auto& c : comps) {
        if (!c.is_array() || c.empty())
            return fail("component must be a non-empty row list");
        for (const auto& r : c) {
            const int row = r.get<int>();
            if (row < 0 || row >= m || seen[static_cast<std::size_t>(row)])
                return fail("components must partition the rows");
            seen[static_cast<std::size_t>(row)] = true;
        }
    }
    for (bool s : seen)
        if (!s)
            return fail("components must partition the rows");
    if (!j["cliques"].is_array() || j["cliques"].size() != comps.size())
        return fail("one clique flag per component");
    if (!j["costs"].is_array() || j["costs"].size() != comps.size())
        return fail("one cost per component");
    for (const auto& c : j["costs"])
        if (!c.is_null() && !c.is_string())
            return fail("costs are rational strings or null");
    if (!j["order"].is_null()) {
        if (!j["order"].is_array() || j["order"].size() != comps.size())
            return fail("order must be a permutation of components");
        std::vector<bool> used(comps.size(), false);
        for (const auto& o : j["order"]) {
            const auto idx = o.get<std::size_t>();
            if (idx >= comps.size() || used[idx])
                return fail("order must be a permutation of components");
            used[idx] = true;
        }
    }
    return true;
}

} // namespace forbcfg

#endif // FORBCFG_REPORT_JSON_HPP
