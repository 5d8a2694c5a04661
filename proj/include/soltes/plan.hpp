#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soltes/error.hpp"

namespace soltes {

/// Layer sizes (l_1, ..., l_d) of the forest attached at v1, v2: l_i is the
/// number of attached vertices at distance i from {v1, v2}.
struct LayerSequence {
    std::vector<std::int64_t> layers;

    std::size_t depth() const { return layers.size(); }
    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto x : layers) s += x;
        return s;
    }
    /// Attached vertices per tree; total() == 2q.
    std::int64_t q() const { return total() / 2; }
    std::int64_t operator[](std::size_t i) const { return layers[i]; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < layers.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(layers[i]);
        }
        return s + ")";
    }

    friend bool operator==(const LayerSequence&, const LayerSequence&) = default;
};

/// delta is the common distance from a target vertex (u1) to v1 and v2;
/// 3t+3 on G_t.
struct PlanConstants {
    int t = 0;
    std::int64_t delta = 0;
};

inline PlanConstants g_t_constants(int t) { return {t, 3 * static_cast<std::int64_t>(t) + 3}; }

/// floor(log2(2q + 3)).
inline int depth_bound(std::int64_t q) {
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(2 * q + 3))) - 1;
}

/// W(G_t - u1) - W(G_t) in closed form.
inline std::int64_t f_poly(std::int64_t t) { return 16 * t * t * t - 8 * t * t - 26 * t - 14; }

/// Sum over attached vertices of their distance to u1: sum (delta + i) l_i.
inline std::int64_t d_of(const LayerSequence& L, std::int64_t delta) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < L.depth(); ++i)
        s += (delta + static_cast<std::int64_t>(i) + 1) * L[i];
    return s;
}
inline std::int64_t d_of(const LayerSequence& L, const PlanConstants& c) { return d_of(L, c.delta); }

/// The three conditions a realizable layer sequence must satisfy, for
/// sum == 2q: l_i in [2, 2^(i+1)] for i < d, l_d in [1, 2^(d+1)], and
/// l_(i+1) <= 2 l_i. Returns an explanation when violated.
inline std::optional<std::string> layer_violation(const LayerSequence& L) {
    const std::size_t d = L.depth();
    if (d == 0) return "empty sequence";
    if (L.total() % 2 != 0) return "odd total";
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t i = k + 1;
        const std::int64_t cap = i + 1 < 62 ? (std::int64_t{1} << (i + 1)) : INT64_MAX;
        const std::int64_t lo = (i < d) ? 2 : 1;
        if (L[k] < lo || L[k] > cap)
            return "l_" + std::to_string(i) + " = " + std::to_string(L[k]) + " outside [" +
                   std::to_string(lo) + "," + std::to_string(cap) + "]";
        if (k + 1 < d && L[k + 1] > 2 * L[k])
            return "l_" + std::to_string(i + 1) + " exceeds twice l_" + std::to_string(i);
    }
    return std::nullopt;
}

/// Complete binary trees at v1 and v2: the unique minimizer of d_of.
inline LayerSequence short_sequence(std::int64_t q) {
    if (q < 1) throw input_error("short_sequence needs q >= 1");
    const int a = depth_bound(q);
    LayerSequence L;
    for (int i = 1; i <= a - 2; ++i) L.layers.push_back(std::int64_t{1} << (i + 1));
    L.layers.push_back(2 * q - (std::int64_t{1} << a) + 4);
    return L;
}

/// Two paths of q vertices: the maximizer of d_of.
inline LayerSequence long_sequence(std::int64_t q) {
    if (q < 1) throw input_error("long_sequence needs q >= 1");
    return {std::vector<std::int64_t>(static_cast<std::size_t>(q), 2)};
}

inline std::int64_t d_min(std::int64_t q, std::int64_t delta) {
    const int a = depth_bound(q);
    return 2 * q * (delta + a - 1) - (std::int64_t{1} << (a + 1)) + 4 * a;
}
inline std::int64_t d_min(std::int64_t q, const PlanConstants& c) { return d_min(q, c.delta); }

inline std::int64_t d_max(std::int64_t q, std::int64_t delta) { return 2 * q * delta + q * q + q; }
inline std::int64_t d_max(std::int64_t q, const PlanConstants& c) { return d_max(q, c.delta); }

/// Where the next modification applies and which clause selected it:
/// clause 1 is 2(l_i - 1) > l_(i+1) + 1, clause 2 is l_i = l_(i+1) = 3.
/// `index` is 0-based.
struct ModificationSite {
    std::size_t index;
    int clause;
};

inline std::optional<ModificationSite> modification_site(const LayerSequence& L) {
    for (std::size_t k = 0; k < L.depth(); ++k) {
        const std::int64_t cur = L[k];
        const std::int64_t nxt = k + 1 < L.depth() ? L[k + 1] : 0;
        if (cur < 3) continue;
        if (2 * (cur - 1) > nxt + 1) return ModificationSite{k, 1};
        if (cur == 3 && nxt == 3) return ModificationSite{k, 2};
    }
    return std::nullopt;
}

/// Moves one vertex from the first eligible layer to the next one
/// (appending a layer if needed). nullopt once the long sequence is reached.
inline std::optional<LayerSequence> modify(const LayerSequence& L) {
    auto site = modification_site(L);
    if (!site) return std::nullopt;
    LayerSequence out = L;
    out.layers[site->index] -= 1;
    if (site->index + 1 == out.depth()) out.layers.push_back(0);
    out.layers[site->index + 1] += 1;
    return out;
}

/// The sequence reached from short_sequence(q) after D - d_min(q) steps;
/// it realizes d_of == D.
inline LayerSequence sequence_for(std::int64_t D, std::int64_t q, const PlanConstants& c) {
    const std::int64_t lo = d_min(q, c), hi = d_max(q, c);
    if (D < lo || D > hi)
        throw domain_error("D = " + std::to_string(D) + " outside [" + std::to_string(lo) + "," +
                           std::to_string(hi) + "] for q = " + std::to_string(q));
    LayerSequence L = short_sequence(q);
    for (std::int64_t step = lo; step < D; ++step) {
        auto next = modify(L);
        if (!next) throw std::logic_error("modification chain ended before reaching D");
        L = std::move(*next);
    }
    return L;
}

/// Every sequence of the modification chain from short to long.
inline std::vector<LayerSequence> enumerate_chain(std::int64_t q) {
    std::vector<LayerSequence> out{short_sequence(q)};
    while (auto next = modify(out.back())) out.push_back(std::move(*next));
    return out;
}

/// All q in [1, bound] with d_min(q) <= D <= d_max(q), as an inclusive
/// interval. d_min and d_max both increase with q, so the feasible set is
/// contiguous; nullopt if empty.
inline std::optional<std::pair<std::int64_t, std::int64_t>> feasible_q(std::int64_t D,
                                                                       std::int64_t delta,
                                                                       std::int64_t bound) {
    std::optional<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t q = 1; q <= bound; ++q) {
        if (d_min(q, delta) > D) break;
        if (d_max(q, delta) < D) continue;
        if (!out) out = {q, q};
        out->second = q;
    }
    return out;
}

/// Search cap for q at parameter t: 16 t ceil(sqrt t).
inline std::int64_t q_search_bound(std::int64_t t) {
    auto root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(t))));
    while (root * root < t) ++root;
    return 16 * t * root;
}

/// (q_min, q_max) with d_min(q) <= f(t) <= d_max(q) at delta = 3t+3.
inline std::pair<std::int64_t, std::int64_t> q_range(int t) {
    if (t < 3) throw domain_error("q_range needs t >= 3, got " + std::to_string(t));
    auto r = feasible_q(f_poly(t), g_t_constants(t).delta, q_search_bound(t));
    if (!r) throw domain_error("no feasible q for t = " + std::to_string(t));
    return *r;
}

} // namespace soltes
