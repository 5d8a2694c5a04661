#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "soltes/error.hpp"
#include "soltes/graph.hpp"
#include "soltes/invariants.hpp"
#include "soltes/permutation.hpp"
#include "soltes/transforms.hpp"

namespace soltes {

inline constexpr std::size_t default_closure_cap = 10'000'000;

namespace detail {

inline std::string perm_key(const Permutation& p) {
    return {reinterpret_cast<const char*>(p.map.data()), p.map.size() * sizeof(std::uint32_t)};
}

} // namespace detail

/// Elements of the group generated by `gens`, in breadth-first discovery
/// order from the identity under right multiplication by the generators.
inline std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                              std::size_t cap = default_closure_cap) {
    if (gens.empty()) throw input_error("group_closure needs at least one generator");
    const std::size_t degree = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != degree) throw input_error("generators of different degree");
    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::unordered_map<std::string, std::size_t> seen{{detail::perm_key(elements[0]), 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& s : gens) {
            Permutation next = compose(elements[head], s);
            auto [it, fresh] = seen.emplace(detail::perm_key(next), elements.size());
            if (!fresh) continue;
            if (elements.size() >= cap) throw limit_error("group closure exceeds " + std::to_string(cap) + " elements");
            elements.push_back(std::move(next));
        }
    }
    return elements;
}

/// S ∪ S⁻¹ without repeats, in order of first appearance.
inline std::vector<Permutation> symmetrize(const std::vector<Permutation>& gens) {
    std::vector<Permutation> out;
    for (const auto& s : gens)
        for (const auto& x : {s, inverse(s)})
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

/// Cayley graph on the closure of `gens`: vertex k is the k-th element of
/// group_closure(gens), and g ~ g*s for s in S ∪ S⁻¹.
inline Graph cayley_graph(const std::vector<Permutation>& gens, std::size_t cap = default_closure_cap) {
    for (const auto& s : gens)
        if (s.is_identity()) throw domain_error("identity in the connection set");
    const std::vector<Permutation> elements = group_closure(gens, cap);
    std::unordered_map<std::string, Vertex> index;
    index.reserve(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(detail::perm_key(elements[k]), static_cast<Vertex>(k));
    std::vector<Edge> edges;
    const auto conn = symmetrize(gens);
    for (std::size_t k = 0; k < elements.size(); ++k)
        for (const auto& s : conn) {
            Vertex a = static_cast<Vertex>(k), b = index.at(detail::perm_key(compose(elements[k], s)));
            if (a < b) edges.push_back({a, b});
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(elements.size(), edges);
}

struct CatalogExpectation {
    std::int64_t group_order = 0;
    std::int64_t girth = 0;
    std::int64_t diameter = 0;
    bool bipartite = false;
};

struct GeneratorCatalogEntry {
    std::string name;
    std::size_t degree = 0;
    std::vector<std::string> generators;
    std::string small_group;
    CatalogExpectation expected;
    std::string transform;  // "truncate" or "linegraph"

    std::vector<Permutation> permutations() const {
        std::vector<Permutation> out;
        for (const auto& g : generators) out.push_back(parse_permutation(g, degree));
        return out;
    }
};

inline std::string default_catalog_path() {
#ifdef SOLTES_DATA_DIR
    return std::string(SOLTES_DATA_DIR) + "/cvt_catalog.json";
#else
    return "data/cvt_catalog.json";
#endif
}

inline std::vector<GeneratorCatalogEntry> load_catalog(const std::string& path = default_catalog_path()) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open catalog " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("catalog " + path + ": " + e.what());
    }
    std::vector<GeneratorCatalogEntry> out;
    try {
        for (const auto& j : doc) {
            GeneratorCatalogEntry e;
            e.name = j.at("name").get<std::string>();
            e.degree = j.at("degree").get<std::size_t>();
            e.generators = j.at("generators").get<std::vector<std::string>>();
            e.small_group = j.value("small_group", "");
            const auto& x = j.at("expected");
            e.expected = {x.at("group_order").get<std::int64_t>(), x.at("girth").get<std::int64_t>(),
                          x.at("diameter").get<std::int64_t>(), x.at("bipartite").get<bool>()};
            e.transform = j.at("transform").get<std::string>();
            if (e.transform != "truncate" && e.transform != "linegraph")
                throw input_error("catalog entry " + e.name + ": unknown transform " + e.transform);
            out.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error("catalog " + path + ": " + e.what());
    }
    return out;
}

inline const GeneratorCatalogEntry& find_entry(const std::vector<GeneratorCatalogEntry>& catalog,
                                               const std::string& name) {
    for (const auto& e : catalog)
        if (e.name == name) return e;
    throw input_error("no catalog entry named " + name);
}

struct EntryReport {
    std::string name;
    std::int64_t group_order = 0;
    std::optional<std::size_t> regular;
    bool connected = false;
    std::optional<std::int64_t> girth;
    std::optional<std::int64_t> diameter;
    bool bipartite = false;
    bool inverse_closed = false;
    std::vector<std::string> mismatches;  // field-by-field
    // Filled when the transformed graph is checked.
    std::optional<std::size_t> transformed_order;
    std::optional<std::size_t> transformed_regular;
    std::optional<SoltesReport> soltes;

    bool passed() const { return mismatches.empty(); }
};

/// Rebuilds the entry's Cayley graph and compares it with the recorded
/// data; with `check_transform`, also builds its truncation or line graph
/// and requires at least a third of its vertices to be Šoltés vertices.
inline EntryReport verify_entry(const GeneratorCatalogEntry& e, bool check_transform = true, unsigned threads = 1) {
    EntryReport r;
    r.name = e.name;
    const auto gens = e.permutations();
    const auto elements = group_closure(gens);
    r.group_order = static_cast<std::int64_t>(elements.size());
    {
        std::unordered_map<std::string, bool> keys;
        for (const auto& p : elements) keys.emplace(detail::perm_key(p), true);
        r.inverse_closed = std::all_of(elements.begin(), elements.end(),
                                       [&](const Permutation& p) { return keys.count(detail::perm_key(inverse(p))) > 0; });
    }
    const Graph g = cayley_graph(gens);
    const Profile p = profile(g);
    r.regular = p.regular;
    r.connected = is_connected(g);
    r.girth = p.girth;
    r.diameter = p.diameter;
    r.bipartite = p.bipartite;
    auto expect = [&](bool ok, const std::string& field, const std::string& got, const std::string& want) {
        if (!ok) r.mismatches.push_back(field + ": got " + got + ", expected " + want);
    };
    auto opt = [](const auto& x) { return x ? std::to_string(*x) : std::string("none"); };
    expect(r.group_order == e.expected.group_order, "group_order", std::to_string(r.group_order),
           std::to_string(e.expected.group_order));
    expect(r.inverse_closed, "inverse_closed", "false", "true");
    expect(r.connected, "connected", "false", "true");
    expect(r.regular == std::optional<std::size_t>(symmetrize(gens).size()), "regular", opt(r.regular),
           std::to_string(symmetrize(gens).size()));
    expect(r.girth == std::optional<std::int64_t>(e.expected.girth), "girth", opt(r.girth), std::to_string(e.expected.girth));
    expect(r.diameter == std::optional<std::int64_t>(e.expected.diameter), "diameter", opt(r.diameter),
           std::to_string(e.expected.diameter));
    expect(r.bipartite == e.expected.bipartite, "bipartite", r.bipartite ? "true" : "false",
           e.expected.bipartite ? "true" : "false");
    if (!check_transform) return r;
    if (e.transform == "truncate" && r.regular != std::optional<std::size_t>(3)) {
        r.mismatches.push_back("transform: truncate needs a cubic Cayley graph");
        return r;
    }
    const Graph h = e.transform == "truncate" ? truncate(g) : line_graph(g);
    const Profile hp = profile(h);
    r.transformed_order = h.order();
    r.transformed_regular = hp.regular;
    r.soltes = soltes_report(h, threads);
    const auto count = static_cast<std::int64_t>(r.soltes->soltes_set.size());
    expect(3 * count >= static_cast<std::int64_t>(h.order()), "soltes_ratio",
           std::to_string(count) + "/" + std::to_string(h.order()), ">= 1/3");
    return r;
}

} // namespace soltes
