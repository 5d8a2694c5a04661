#pragma once

#include <algorithm>
#include <vector>

#include "soltes/error.hpp"
#include "soltes/graph.hpp"

namespace soltes {

/// Replaces every vertex of a cubic graph by a triangle on its three edge
/// incidences. Incidence (v, e) is vertex 3v + rank of e among v's edges
/// (equivalently, the rank of the other endpoint in v's neighbor list).
inline Graph truncate(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3)
            throw domain_error("truncate needs a cubic graph; vertex " + std::to_string(v) + " has degree " +
                               std::to_string(g.degree(v)));
    auto rank = [&](Vertex v, Vertex w) {
        auto nb = g.neighbors(v);
        return static_cast<Vertex>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(3 * g.order() + g.size());
    for (Vertex v = 0; v < g.order(); ++v) {
        edges.push_back({3 * v, 3 * v + 1});
        edges.push_back({3 * v, 3 * v + 2});
        edges.push_back({3 * v + 1, 3 * v + 2});
    }
    for (const Edge& e : g.edges()) edges.push_back({3 * e.u + rank(e.u, e.v), 3 * e.v + rank(e.v, e.u)});
    return Graph::from_edges(3 * g.order(), edges);
}

/// Vertex k is the k-th edge of g in lexicographic order.
inline Graph line_graph(const Graph& g) {
    const std::vector<Edge> es = g.edges();
    auto index = [&](Vertex a, Vertex b) {
        const Edge key{std::min(a, b), std::max(a, b)};
        return static_cast<Vertex>(std::lower_bound(es.begin(), es.end(), key) - es.begin());
    };
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex x = index(v, nb[i]), y = index(v, nb[j]);
                edges.push_back({std::min(x, y), std::max(x, y)});
            }
    }
    return Graph::from_edges(es.size(), edges);
}

} // namespace soltes
