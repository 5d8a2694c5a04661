#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_set>
#include <vector>

#include "soltes/canonical.hpp"
#include "soltes/error.hpp"
#include "soltes/invariants.hpp"
#include "soltes/parallel.hpp"

namespace soltes {

namespace detail {

// Whether a connected graph on k vertices with degrees <= r can still be
// extended by m more vertices, each joined only to vertices with spare
// degree, into an r-regular graph.
inline bool extendable(const SmallGraph& g, int r, int m) {
    int spare = 0;
    for (int v = 0; v < g.n; ++v) {
        const int f = r - g.degree(v);
        if (f > m) return false;
        spare += f;
    }
    if (m == 0) return spare == 0;
    if (spare == 0) return false;
    // spare + 2 e(R) = r m with 0 <= e(R) <= m(m-1)/2.
    const int rest = r * m - spare;
    return rest >= 0 && rest % 2 == 0 && rest <= m * (m - 1);
}

inline void expand(const CanonicalForm& state, int n, int r, std::vector<CanonicalForm>& out) {
    const SmallGraph g = state.graph();
    const int k = g.n, m = n - k;  // m counts the vertex being added
    std::uint32_t open = 0, forced = 0;
    for (int v = 0; v < k; ++v) {
        const int f = r - g.degree(v);
        if (f > 0) open |= std::uint32_t{1} << v;
        if (f == m) forced |= std::uint32_t{1} << v;
    }
    if (std::popcount(forced) > r) return;
    const std::uint32_t optional = open & ~forced;
    // Every subset of the optional vertices, joined with the forced ones.
    for (std::uint32_t sub = optional;; sub = (sub - 1) & optional) {
        const std::uint32_t nb = sub | forced;
        const int d = std::popcount(nb);
        if (d >= 1 && d <= r) {
            SmallGraph h = g;
            h.n = k + 1;
            for (std::uint32_t x = nb; x; x &= x - 1) h.add_edge(k, std::countr_zero(x));
            if (extendable(h, r, m - 1)) out.push_back(canonical_form(h));
        }
        if (sub == 0) break;
    }
}

} // namespace detail

/// Every connected r-regular graph on n vertices, one per isomorphism
/// class, sorted by canonical form. Grows graphs one vertex at a time
/// (each new vertex joined to existing vertices of spare degree, which
/// keeps every prefix connected) and merges isomorphic partial graphs at
/// every size. Requires n r even, n > r, n <= 20.
inline std::vector<CanonicalForm> gen_regular_forms(int n, int r, unsigned threads = 1) {
    if (r < 0 || n < 1) throw input_error("gen_regular needs n >= 1 and r >= 0");
    if ((n * r) % 2 != 0) throw domain_error("n r must be even");
    if (n <= r) throw domain_error("n must exceed r");
    if (n > canonical_max_order) throw limit_error("gen_regular supports n <= 20");
    SmallGraph one;
    one.n = 1;
    std::vector<CanonicalForm> level{canonical_form(one)};
    if (n == 1) return r == 0 ? level : std::vector<CanonicalForm>{};
    for (int k = 1; k < n; ++k) {
        const std::size_t chunks = std::min<std::size_t>(level.size(), 256);
        std::vector<std::vector<CanonicalForm>> parts(chunks);
        parallel_for(chunks, threads, [&](std::size_t c) {
            std::unordered_set<CanonicalForm, CanonicalFormHash> local;
            std::vector<CanonicalForm> buf;
            for (std::size_t i = c; i < level.size(); i += chunks) {
                buf.clear();
                detail::expand(level[i], n, r, buf);
                local.insert(buf.begin(), buf.end());
            }
            parts[c].assign(local.begin(), local.end());
        });
        std::unordered_set<CanonicalForm, CanonicalFormHash> merged;
        for (auto& p : parts) {
            merged.insert(p.begin(), p.end());
            std::vector<CanonicalForm>().swap(p);
        }
        level.assign(merged.begin(), merged.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

inline std::vector<Graph> gen_regular(int n, int r, unsigned threads = 1) {
    std::vector<Graph> out;
    for (const auto& c : gen_regular_forms(n, r, threads)) out.push_back(c.graph().to_graph());
    return out;
}

/// Number of connected r-regular graphs on n vertices and, for every k >= 1,
/// how many of them have exactly k Šoltés vertices.
struct TableRow {
    int n = 0;
    int r = 0;
    std::int64_t total = 0;
    std::map<std::int64_t, std::int64_t> counts;
    std::vector<Graph> with_soltes;  // graphs with at least one Šoltés vertex, in generation order
};

inline constexpr int table_max_cubic_order = 16;
inline constexpr int table_max_quartic_order = 13;

inline TableRow classify_table(int n, int r, unsigned threads = 1) {
    if ((r <= 3 && n > table_max_cubic_order) || (r >= 4 && n > table_max_quartic_order))
        throw limit_error("classify_table is capped at n <= 16 for r <= 3 and n <= 13 for r >= 4");
    const std::vector<Graph> graphs = gen_regular(n, r, threads);
    std::vector<std::size_t> k(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) { k[i] = soltes_report(graphs[i]).soltes_set.size(); });
    TableRow row{n, r, static_cast<std::int64_t>(graphs.size()), {}, {}};
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (k[i] > 0) {
            ++row.counts[static_cast<std::int64_t>(k[i])];
            row.with_soltes.push_back(graphs[i]);
        }
    return row;
}

} // namespace soltes
