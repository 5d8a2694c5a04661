#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "soltes/error.hpp"

namespace soltes {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in CSR form; every neighbor list is strictly
/// increasing, symmetric, and free of self-loops. Construct through
/// `Graph::from_edges` or `GraphBuilder`, both of which validate.
class Graph {
public:
    Graph() : offsets_{0} {}

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}

    /// Throws input_error on self-loops, duplicate edges, or endpoints >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
        return from_edges(n, std::span<const Edge>(edges.data(), edges.size()));
    }

    std::size_t order() const { return offsets_.size() - 1; }
    std::size_t size() const { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool contains(Vertex v) const { return v < order(); }

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(size());
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.push_back({u, v});
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

inline Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") with n=" + std::to_string(n));
        if (e.u == e.v) throw input_error("self-loop at vertex " + std::to_string(e.u));
        ++deg[e.u];
        ++deg[e.v];
    }
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
        g.targets_[fill[e.u]++] = e.v;
        g.targets_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw input_error("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

/// Accumulates edges and produces a validated Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

    Vertex add_vertex() { return static_cast<Vertex>(n_++); }

    std::size_t order() const { return n_; }

    void add_edge(Vertex u, Vertex v) { edges_.push_back({std::min(u, v), std::max(u, v)}); }

    Graph build() const { return Graph::from_edges(n_, edges_); }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

} // namespace soltes
