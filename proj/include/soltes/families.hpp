#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "soltes/error.hpp"
#include "soltes/graph.hpp"

namespace soltes {

/// A graph together with the named vertices of its construction.
struct LabeledGraph {
    Graph graph;
    std::map<std::string, Vertex> labels;
    std::vector<Vertex> centers;

    Vertex at(const std::string& name) const {
        auto it = labels.find(name);
        if (it == labels.end()) throw input_error("no vertex labeled " + name);
        return it->second;
    }
};

inline Graph cycle(std::size_t n) {
    if (n < 3) throw input_error("cycle needs n >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return b.build();
}

inline Graph path(std::size_t n) {
    if (n < 1) throw input_error("path needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

inline Graph complete(std::size_t n) {
    if (n < 1) throw input_error("complete graph needs n >= 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    GraphBuilder gb(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) gb.add_edge(u, static_cast<Vertex>(a + v));
    return gb.build();
}

/// Hub (vertex 0, labeled "hub") joined to every vertex of a cycle on n-1.
inline LabeledGraph wheel(std::size_t n) {
    if (n < 4) throw input_error("wheel needs n >= 4");
    GraphBuilder b(n);
    const std::size_t rim = n - 1;
    for (Vertex i = 0; i < rim; ++i) {
        b.add_edge(0, i + 1);
        b.add_edge(i + 1, static_cast<Vertex>((i + 1) % rim + 1));
    }
    return {b.build(), {{"hub", 0}}, {}};
}

namespace detail {

// Diamond (K4 - e) with local order: tip a, middle m1, middle m2, tip b.
inline Vertex add_diamond(GraphBuilder& b) {
    Vertex a = b.add_vertex(), m1 = b.add_vertex(), m2 = b.add_vertex(), c = b.add_vertex();
    b.add_edge(a, m1);
    b.add_edge(a, m2);
    b.add_edge(m1, m2);
    b.add_edge(m1, c);
    b.add_edge(m2, c);
    return a;
}

// The 8-vertex gadget F: 4-cycle p1 p2 p3 p4, subdivision vertices z1 z2
// (adjacent to each other, to p1 and p3 respectively), leaves v1 at p2 and
// v2 at p4. Returns {z1, z2}.
inline std::pair<Vertex, Vertex> add_gadget(GraphBuilder& b, LabeledGraph& out) {
    Vertex p1 = b.add_vertex(), p2 = b.add_vertex(), p3 = b.add_vertex(), p4 = b.add_vertex();
    Vertex z1 = b.add_vertex(), z2 = b.add_vertex();
    Vertex v1 = b.add_vertex(), v2 = b.add_vertex();
    b.add_edge(p1, p2);
    b.add_edge(p2, p3);
    b.add_edge(p3, p4);
    b.add_edge(p4, p1);
    b.add_edge(z1, z2);
    b.add_edge(z1, p1);
    b.add_edge(z2, p3);
    b.add_edge(v1, p2);
    b.add_edge(v2, p4);
    out.labels.insert({{"p1", p1}, {"p2", p2}, {"p3", p3}, {"p4", p4},
                       {"z1", z1}, {"z2", z2}, {"v1", v1}, {"v2", v2}});
    return {z1, z2};
}

} // namespace detail

/// Ring of 2t diamonds, one ring edge subdivided by z1 z2 which attach to
/// the gadget F. Vertices: diamonds 0..2t-1 (4 each, ring order), then F.
/// u1 is the far tip of diamond t-1 and u2 the near tip of diamond t, so
/// u1u2 is the ring edge opposite the subdivision.
inline LabeledGraph g_t(int t) {
    if (t < 1) throw input_error("G_t needs t >= 1");
    LabeledGraph out;
    GraphBuilder b;
    const Vertex k = static_cast<Vertex>(2 * t);
    std::vector<Vertex> tips;
    for (Vertex i = 0; i < k; ++i) tips.push_back(detail::add_diamond(b));
    for (Vertex i = 0; i + 1 < k; ++i) b.add_edge(tips[i] + 3, tips[i + 1]);
    auto [z1, z2] = detail::add_gadget(b, out);
    b.add_edge(z1, tips.front());
    b.add_edge(z2, tips.back() + 3);
    out.graph = b.build();
    Vertex u1 = tips[static_cast<std::size_t>(t - 1)] + 3;
    Vertex u2 = tips[static_cast<std::size_t>(t)];
    out.labels["u1"] = u1;
    out.labels["u2"] = u2;
    out.centers = {u1, u2};
    return out;
}

/// 2^(r-1) chains of 2t diamonds hung between the leaves of two binary
/// trees B, B' of depth r-1, whose roots attach to z1 and z2 of F.
/// Vertices: chains (8t each), internal nodes of B then B' in heap order,
/// then F. The centers are the two middle tips of every chain; u1, u2 are
/// those of chain 0. For r = 1 this is exactly g_t(t).
inline LabeledGraph g_t_r(int t, int r) {
    if (t < 1 || r < 1) throw input_error("G_{t,r} needs t >= 1 and r >= 1");
    if (r > 20) throw input_error("G_{t,r}: r too large");
    LabeledGraph out;
    GraphBuilder b;
    const std::size_t chains = std::size_t{1} << (r - 1);
    const Vertex k = static_cast<Vertex>(2 * t);
    std::vector<Vertex> first_tip(chains), last_tip(chains);
    for (std::size_t c = 0; c < chains; ++c) {
        std::vector<Vertex> tips;
        for (Vertex i = 0; i < k; ++i) tips.push_back(detail::add_diamond(b));
        for (Vertex i = 0; i + 1 < k; ++i) b.add_edge(tips[i] + 3, tips[i + 1]);
        first_tip[c] = tips.front();
        last_tip[c] = tips.back() + 3;
        out.centers.push_back(tips[static_cast<std::size_t>(t - 1)] + 3);
        out.centers.push_back(tips[static_cast<std::size_t>(t)]);
    }
    // Heap-indexed binary tree, node 1 is the root; nodes >= chains are leaves.
    auto add_tree = [&](const std::vector<Vertex>& leaves) {
        std::vector<Vertex> node(2 * chains);
        for (std::size_t i = 1; i < chains; ++i) node[i] = b.add_vertex();
        for (std::size_t c = 0; c < chains; ++c) node[chains + c] = leaves[c];
        for (std::size_t i = 2; i < 2 * chains; ++i) b.add_edge(node[i / 2], node[i]);
        return node[1];
    };
    Vertex root = add_tree(first_tip);
    Vertex root_prime = add_tree(last_tip);
    auto [z1, z2] = detail::add_gadget(b, out);
    b.add_edge(z1, root);
    b.add_edge(z2, root_prime);
    out.graph = b.build();
    out.labels["u1"] = out.centers[0];
    out.labels["u2"] = out.centers[1];
    return out;
}

} // namespace soltes
