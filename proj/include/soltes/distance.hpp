#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "soltes/error.hpp"
#include "soltes/graph.hpp"

namespace soltes {

/// Integer sum of distances, or INFINITE when some pair is unreachable.
///
/// Only equality and finiteness may be inspected; reading the value of an
/// infinite sum is a logic error.
class DistanceSum {
public:
    constexpr explicit DistanceSum(std::int64_t v) : value_(v) {}

    static constexpr DistanceSum infinite() { return DistanceSum(); }

    constexpr bool finite() const { return value_ >= 0; }

    std::int64_t value() const {
        if (!finite()) throw std::logic_error("value() of an infinite distance sum");
        return value_;
    }

    std::string to_string() const { return finite() ? std::to_string(value_) : "inf"; }

    friend constexpr bool operator==(const DistanceSum&, const DistanceSum&) = default;

private:
    constexpr DistanceSum() : value_(-1) {}
    std::int64_t value_;
};

/// Hop distances from one source; unreachable vertices hold `unreachable`.
struct DistanceVector {
    static constexpr std::int32_t unreachable = -1;

    Vertex source = 0;
    std::vector<std::int32_t> dist;

    bool reachable(Vertex v) const { return dist[v] != unreachable; }
};

inline DistanceVector bfs_distances(const Graph& g, Vertex src) {
    if (!g.contains(src))
        throw input_error("bfs source " + std::to_string(src) + " out of range for n=" +
                          std::to_string(g.order()));
    DistanceVector out{src, std::vector<std::int32_t>(g.order(), DistanceVector::unreachable)};
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    queue.push_back(src);
    out.dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (out.dist[w] == DistanceVector::unreachable) {
                out.dist[w] = out.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return out;
}

inline DistanceSum transmission(const Graph& g, Vertex v) {
    DistanceVector d = bfs_distances(g, v);
    std::int64_t total = 0;
    for (std::int32_t x : d.dist) {
        if (x == DistanceVector::unreachable) return DistanceSum::infinite();
        total += x;
    }
    return DistanceSum(total);
}

namespace detail {

// Sum of d(s, v) over all ordered pairs, running one BFS per source but
// 64*Lanes sources at once: each vertex carries a bitset of the sources
// whose frontier currently contains it. nullopt if the graph is disconnected.
template <std::size_t Lanes>
std::optional<std::int64_t> ordered_distance_sum(const Graph& g) {
    using Block = std::array<std::uint64_t, Lanes>;
    constexpr std::size_t batch = 64 * Lanes;
    const std::size_t n = g.order();
    std::vector<Block> visited(n), frontier(n), next(n);
    std::int64_t total = 0;
    for (std::size_t base = 0; base < n; base += batch) {
        const std::size_t count = std::min(batch, n - base);
        for (std::size_t v = 0; v < n; ++v) visited[v] = frontier[v] = Block{};
        for (std::size_t k = 0; k < count; ++k) {
            visited[base + k][k / 64] |= std::uint64_t{1} << (k % 64);
            frontier[base + k][k / 64] |= std::uint64_t{1} << (k % 64);
        }
        std::int64_t reached = static_cast<std::int64_t>(count);
        for (std::int64_t level = 1;; ++level) {
            std::int64_t fresh = 0;
            for (std::size_t v = 0; v < n; ++v) {
                Block acc{};
                for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
                    for (std::size_t w = 0; w < Lanes; ++w) acc[w] |= frontier[u][w];
                for (std::size_t w = 0; w < Lanes; ++w) {
                    acc[w] &= ~visited[v][w];
                    visited[v][w] |= acc[w];
                    fresh += std::popcount(acc[w]);
                }
                next[v] = acc;
            }
            if (fresh == 0) break;
            total += level * fresh;
            reached += fresh;
            frontier.swap(next);
        }
        if (reached != static_cast<std::int64_t>(count * n)) return std::nullopt;
    }
    return total;
}

// One plain BFS per source.
inline std::int64_t scalar_distance_sum(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> seen(n, 0);
    std::vector<Vertex> queue(n);
    std::vector<std::int32_t> dist(n);
    std::int64_t total = 0;
    for (Vertex s = 0; s < n; ++s) {
        const std::uint32_t mark = s + 1;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        seen[s] = mark;
        dist[s] = 0;
        while (head < tail) {
            const Vertex u = queue[head++];
            total += dist[u];
            for (Vertex w : g.neighbors(u))
                if (seen[w] != mark) {
                    seen[w] = mark;
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
        }
    }
    return total;
}

inline std::optional<std::int64_t> ordered_distance_sum(const Graph& g) {
    const std::size_t n = g.order();
    std::int32_t ecc = 0;
    for (std::int32_t x : bfs_distances(g, 0).dist) {
        if (x == DistanceVector::unreachable) return std::nullopt;
        ecc = std::max(ecc, x);
    }
    const std::size_t lanes = n <= 64 ? 1 : n <= 128 ? 2 : 4;
    // A sweep scans every edge once per level for all 64*lanes sources, so
    // long thin graphs are cheaper one source at a time.
    if (static_cast<std::size_t>(ecc) * lanes > std::min(n, 64 * lanes)) return scalar_distance_sum(g);
    if (lanes == 1) return ordered_distance_sum<1>(g);
    if (lanes == 2) return ordered_distance_sum<2>(g);
    return ordered_distance_sum<4>(g);
}

} // namespace detail

/// Sum of d(u,v) over unordered pairs; INFINITE iff disconnected with n >= 2.
inline DistanceSum wiener(const Graph& g) {
    if (g.order() <= 1) return DistanceSum(0);
    auto ordered = detail::ordered_distance_sum(g);
    if (!ordered) return DistanceSum::infinite();
    return DistanceSum(*ordered / 2);
}

} // namespace soltes
