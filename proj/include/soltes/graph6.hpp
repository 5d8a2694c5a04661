#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "soltes/error.hpp"
#include "soltes/graph.hpp"

namespace soltes {

inline constexpr std::string_view graph6_header = ">>graph6<<";
inline constexpr std::uint64_t graph6_max_order = 1'000'000;

namespace detail {

inline void graph6_size(std::string& out, std::uint64_t n) {
    auto put = [&](std::uint64_t x, int chars) {
        for (int k = chars - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((x >> (6 * k)) & 63)));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back(126);
        put(n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        put(n, 6);
    }
}

} // namespace detail

/// Header-free graph6 text of `g`.
inline std::string encode_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    detail::graph6_size(out, n);
    int acc = 0, bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

/// Parses one graph6 string, with or without the ">>graph6<<" header.
/// Trailing whitespace (a line end) is ignored. Throws input_error on
/// characters outside 63..126, a wrong body length, nonzero padding bits,
/// or n above graph6_max_order.
inline Graph decode_graph6(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    if (s.starts_with(graph6_header)) s.remove_prefix(graph6_header.size());
    if (s.empty()) throw input_error("empty graph6 string");
    for (char c : s)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw input_error("graph6 byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");
    std::size_t pos = 0;
    auto take = [&](int chars) {
        if (pos + static_cast<std::size_t>(chars) > s.size()) throw input_error("truncated graph6 size field");
        std::uint64_t x = 0;
        for (int k = 0; k < chars; ++k) x = (x << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
        return x;
    };
    std::uint64_t n;
    if (s[0] != 126) {
        n = take(1);
    } else if (s.size() > 1 && s[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > graph6_max_order)
        throw input_error("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(graph6_max_order));
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t chars = (pairs + 5) / 6;
    if (s.size() - pos != chars)
        throw input_error("graph6 body has " + std::to_string(s.size() - pos) + " characters, expected " +
                          std::to_string(chars));
    std::vector<Edge> edges;
    std::uint64_t index = 0;
    Vertex i = 0, j = 1;
    for (std::size_t c = pos; c < s.size(); ++c) {
        const int x = s[c] - 63;
        for (int b = 5; b >= 0; --b, ++index) {
            const bool bit = (x >> b) & 1;
            if (index >= pairs) {
                if (bit) throw input_error("nonzero graph6 padding bits");
                continue;
            }
            if (bit) edges.push_back({i, j});
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

} // namespace soltes
