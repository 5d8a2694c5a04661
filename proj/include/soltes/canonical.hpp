#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "soltes/error.hpp"
#include "soltes/graph.hpp"

namespace soltes {

inline constexpr int canonical_max_order = 20;

/// Dense graph on at most 20 vertices; adj[v] is a bitmask of neighbors.
struct SmallGraph {
    int n = 0;
    std::array<std::uint32_t, canonical_max_order> adj{};

    static SmallGraph from_graph(const Graph& g) {
        if (g.order() > canonical_max_order)
            throw limit_error("canonical form supports at most " + std::to_string(canonical_max_order) + " vertices");
        SmallGraph s;
        s.n = static_cast<int>(g.order());
        for (const Edge& e : g.edges()) s.add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
        return s;
    }

    Graph to_graph() const {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u] >> v & 1) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        return Graph::from_edges(static_cast<std::size_t>(n), edges);
    }

    void add_edge(int u, int v) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    int degree(int v) const { return std::popcount(adj[v]); }
};

/// Relabeling-invariant code: order plus the upper adjacency triangle of
/// the canonically relabeled graph, packed row by row.
struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 4> bits{};

    SmallGraph graph() const {
        SmallGraph g;
        g.n = n;
        int k = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++k)
                if (bits[k >> 6] >> (k & 63) & 1) g.add_edge(u, v);
        return g;
    }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const {
        std::uint64_t h = c.n * 0x9E3779B97F4A7C15ull;
        for (auto w : c.bits) h = (h ^ w) * 0xBF58476D1CE4E5B9ull + (h >> 29);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbor counts into each cell until the partition is
// equitable. Fragments are ordered by count, so the result depends only on
// the graph and the input cell order.
inline void refine(const SmallGraph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            std::uint32_t mask = 0;
            for (int v : cells[s]) mask |= std::uint32_t{1} << v;
            Cells next;
            next.reserve(cells.size() + 4);
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::array<std::vector<int>, canonical_max_order + 1> by;
                for (int v : cell) by[static_cast<std::size_t>(std::popcount(g.adj[v] & mask))].push_back(v);
                std::size_t parts = 0;
                for (auto& b : by)
                    if (!b.empty()) {
                        next.push_back(std::move(b));
                        ++parts;
                    }
                if (parts > 1) changed = true;
            }
            cells = std::move(next);
        }
    }
}

struct Search {
    const SmallGraph& g;
    std::vector<int> best_pos;  // vertex -> canonical position
    std::array<std::uint32_t, canonical_max_order> best_rows{};
    bool have_best = false;
    std::vector<std::vector<int>> autos;

    std::array<std::uint32_t, canonical_max_order> rows_for(const std::vector<int>& pos) const {
        std::array<std::uint32_t, canonical_max_order> rows{};
        for (int v = 0; v < g.n; ++v) {
            std::uint32_t r = 0;
            for (std::uint32_t m = g.adj[v]; m; m &= m - 1) r |= std::uint32_t{1} << pos[std::countr_zero(m)];
            rows[pos[v]] = r;
        }
        return rows;
    }

    void leaf(const Cells& cells) {
        std::vector<int> pos(g.n);
        for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i][0]] = static_cast<int>(i);
        auto rows = rows_for(pos);
        if (!have_best || rows > best_rows) {
            best_rows = rows;
            best_pos = pos;
            have_best = true;
        } else if (rows == best_rows) {
            // v -> w with pos[w] == best_pos[v].
            std::vector<int> at(g.n), gamma(g.n);
            for (int w = 0; w < g.n; ++w) at[pos[w]] = w;
            for (int v = 0; v < g.n; ++v) gamma[v] = at[best_pos[v]];
            autos.push_back(std::move(gamma));
        }
    }

    void run(Cells cells, std::vector<int>& prefix) {
        refine(g, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (!tried.empty() && same_orbit(v, tried, prefix)) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            run(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    // Whether v is in the orbit of an already tried vertex under the
    // automorphisms found so far that fix the prefix pointwise.
    bool same_orbit(int v, const std::vector<int>& tried, const std::vector<int>& prefix) const {
        std::vector<int> root(g.n);
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
        for (const auto& a : autos) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return a[p] == p; });
            if (!fixes) continue;
            for (int x = 0; x < g.n; ++x) root[find(x)] = find(a[x]);
        }
        return std::any_of(tried.begin(), tried.end(), [&](int u) { return find(u) == find(v); });
    }
};

} // namespace detail

/// Canonical labeling: position in the canonical order of every vertex.
/// Combines equitable refinement with exhaustive individualization and
/// pruning by discovered automorphisms.
inline std::vector<int> canonical_labeling(const SmallGraph& g) {
    if (g.n > canonical_max_order) throw limit_error("canonical labeling supports at most 20 vertices");
    if (g.n == 0) return {};
    detail::Search s{g, {}, {}, false, {}};
    detail::Cells cells(1);
    for (int v = 0; v < g.n; ++v) cells[0].push_back(v);
    std::vector<int> prefix;
    s.run(std::move(cells), prefix);
    return s.best_pos;
}

inline CanonicalForm canonical_form(const SmallGraph& g) {
    const std::vector<int> pos = canonical_labeling(g);
    SmallGraph h;
    h.n = g.n;
    for (int u = 0; u < g.n; ++u)
        for (std::uint32_t m = g.adj[u]; m; m &= m - 1) h.adj[pos[u]] |= std::uint32_t{1} << pos[std::countr_zero(m)];
    CanonicalForm c;
    c.n = static_cast<std::uint8_t>(g.n);
    int k = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v, ++k)
            if (h.adj[u] >> v & 1) c.bits[k >> 6] |= std::uint64_t{1} << (k & 63);
    return c;
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_form(SmallGraph::from_graph(g)); }

} // namespace soltes
