#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "soltes/distance.hpp"
#include "soltes/error.hpp"
#include "soltes/graph.hpp"
#include "soltes/parallel.hpp"

namespace soltes {

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    DistanceVector d = bfs_distances(g, 0);
    return std::all_of(d.dist.begin(), d.dist.end(),
                       [](std::int32_t x) { return x != DistanceVector::unreachable; });
}

/// Connected, at least three vertices, and no articulation vertex.
inline bool is_biconnected(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3 || !is_connected(g)) return false;
    // Iterative Tarjan low-link from root 0.
    std::vector<std::int64_t> disc(n, -1), low(n, 0);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::size_t> cursor(n, 0);
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = 0;
    std::int64_t clock = 1;
    std::size_t root_children = 0;
    while (!stack.empty()) {
        Vertex u = stack.back();
        auto nb = g.neighbors(u);
        if (cursor[u] < nb.size()) {
            Vertex w = nb[cursor[u]++];
            if (disc[w] < 0) {
                parent[w] = u;
                disc[w] = low[w] = clock++;
                if (u == 0) ++root_children;
                stack.push_back(w);
            } else if (w != parent[u] || u == 0) {
                low[u] = std::min(low[u], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        if (u == 0) break;
        Vertex p = parent[u];
        low[p] = std::min(low[p], low[u]);
        if (p != 0 && low[u] >= disc[p]) return false;
    }
    return root_children <= 1;
}

/// G - v, with the remaining vertices renumbered in increasing order.
inline Graph delete_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v))
        throw input_error("vertex " + std::to_string(v) + " out of range for deletion");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        edges.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
    }
    return Graph::from_edges(g.order() - 1, edges);
}

/// Replaces the vertices in `vs` by one vertex adjacent to all their outside
/// neighbors. The merged vertex takes the position of min(vs); the others
/// are compacted in order.
inline Graph contract_set(const Graph& g, std::vector<Vertex> vs) {
    if (vs.empty()) throw input_error("contract_set needs a non-empty vertex set");
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (!g.contains(vs.back())) throw input_error("contract_set vertex out of range");
    const std::size_t n = g.order();
    std::vector<bool> merged(n, false);
    for (Vertex v : vs) merged[v] = true;
    std::vector<Vertex> image(n);
    Vertex next = 0;
    for (Vertex x = 0; x < n; ++x) {
        if (merged[x] && x != vs.front()) continue;
        image[x] = next++;
    }
    for (Vertex v : vs) image[v] = image[vs.front()];
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex a = image[e.u], b = image[e.v];
        if (a == b) continue;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(next, edges);
}

struct Profile {
    std::optional<std::int64_t> girth;     // nullopt: acyclic
    std::optional<std::int64_t> diameter;  // nullopt: disconnected
    bool bipartite = true;
    std::vector<std::size_t> degrees;      // ascending
    std::optional<std::size_t> regular;
};

inline std::optional<std::int64_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    std::int64_t best = -1;
    std::vector<std::int32_t> dist(n, -1);
    std::vector<Vertex> parent(n), queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        parent[s] = s;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            if (best >= 0 && 2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    std::int64_t len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline bool is_bipartite(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> color(n, -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline std::optional<std::int64_t> diameter(const Graph& g) {
    std::int64_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        DistanceVector d = bfs_distances(g, s);
        for (std::int32_t x : d.dist) {
            if (x == DistanceVector::unreachable) return std::nullopt;
            best = std::max<std::int64_t>(best, x);
        }
    }
    return best;
}

inline Profile profile(const Graph& g) {
    Profile p;
    p.girth = girth(g);
    p.diameter = diameter(g);
    p.bipartite = is_bipartite(g);
    for (Vertex v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
    std::sort(p.degrees.begin(), p.degrees.end());
    if (!p.degrees.empty() && p.degrees.front() == p.degrees.back()) p.regular = p.degrees.front();
    return p;
}

/// Exact rational num/den kept unreduced, so num is the Šoltés count.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct SoltesReport {
    DistanceSum wiener{0};
    std::vector<DistanceSum> per_vertex;  // W(G - v), indexed by v
    std::vector<Vertex> soltes_set;       // ascending
    Ratio alpha;
};

/// W(G - v).
inline DistanceSum removal_wiener(const Graph& g, Vertex v) { return wiener(delete_vertex(g, v)); }

/// Requires a connected graph (domain_error otherwise). The per-vertex
/// removals are independent and are spread over `threads` workers
/// (0 = hardware concurrency); the result does not depend on that count.
inline SoltesReport soltes_report(const Graph& g, unsigned threads = 1) {
    if (!is_connected(g)) throw domain_error("soltes_report requires a connected graph");
    SoltesReport r;
    r.wiener = wiener(g);
    const std::size_t n = g.order();
    r.per_vertex.assign(n, DistanceSum::infinite());
    parallel_for(n, threads, [&](std::size_t v) {
        r.per_vertex[v] = removal_wiener(g, static_cast<Vertex>(v));
    });
    for (Vertex v = 0; v < n; ++v)
        if (r.per_vertex[v].finite() && r.per_vertex[v] == r.wiener) r.soltes_set.push_back(v);
    r.alpha = {static_cast<std::int64_t>(r.soltes_set.size()), static_cast<std::int64_t>(n)};
    return r;
}

} // namespace soltes
