#pragma once

#include <numeric>
#include <string>

#include <json.hpp>

#include "soltes/builder.hpp"
#include "soltes/invariants.hpp"

namespace soltes {

using ordered_json = nlohmann::ordered_json;

/// "p/q" in lowest terms; a zero count keeps the order as denominator.
inline std::string format_ratio(const Ratio& r) {
    if (r.num == 0) return "0/" + std::to_string(r.den);
    const std::int64_t g = std::gcd(r.num, r.den);
    return std::to_string(r.num / g) + "/" + std::to_string(r.den / g);
}

inline ordered_json report_json(const SoltesReport& r, const std::string& id) {
    ordered_json j;
    j["id"] = id;
    j["n"] = r.per_vertex.size();
    if (r.wiener.finite())
        j["wiener"] = r.wiener.value();
    else
        j["wiener"] = "inf";
    j["soltes_count"] = r.soltes_set.size();
    j["soltes_vertices"] = r.soltes_set;
    j["alpha"] = format_ratio(r.alpha);
    return j;
}

/// One JSON line: id, n, wiener, soltes_count, soltes_vertices, alpha.
inline std::string write_report(const SoltesReport& r, const std::string& id) { return report_json(r, id).dump(); }

inline ordered_json edges_json(const std::vector<Edge>& edges) {
    ordered_json out = ordered_json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

inline ordered_json plan_json(const ConstructionPlan& plan) {
    ordered_json j;
    j["t"] = plan.constants.t;
    j["delta"] = plan.constants.delta;
    j["target"] = plan.target;
    j["layers"] = plan.layers.layers;
    j["realized_layers"] = plan.realized.layers;
    ordered_json labels;
    for (const auto& [name, v] : plan.base.labels) labels[name] = v;
    j["labels"] = labels;
    j["centers"] = plan.base.centers;
    j["levels"] = plan.levels;
    ordered_json parents = ordered_json::array();
    for (const auto& tv : plan.tree)
        parents.push_back({{"vertex", tv.vertex}, {"parent", tv.parent}, {"level", tv.level}, {"tree", tv.tree}});
    j["tree"] = parents;
    j["red_edges"] = edges_json(plan.red_edges);
    j["blue_edges"] = edges_json(plan.blue_edges);
    if (plan.contraction)
        j["contraction"] = *plan.contraction;
    else
        j["contraction"] = nullptr;
    return j;
}

inline ordered_json check_json(const ConstructionCheck& c) {
    ordered_json j;
    j["cubic"] = c.cubic;
    j["biconnected"] = c.biconnected;
    j["layered"] = c.layered;
    j["wiener"] = c.wiener.finite() ? ordered_json(c.wiener.value()) : ordered_json("inf");
    j["wiener_drop"] = c.wiener_drop ? ordered_json(*c.wiener_drop) : ordered_json(nullptr);
    j["centers"] = c.centers_checked;
    j["failing_centers"] = c.failing_centers;
    j["passed"] = c.passed();
    return j;
}

} // namespace soltes
