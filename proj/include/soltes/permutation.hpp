#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "soltes/error.hpp"

namespace soltes {

/// Bijection on 0..degree-1; image(i) = map[i].
struct Permutation {
    std::vector<std::uint32_t> map;

    static Permutation identity(std::size_t degree) {
        Permutation p;
        p.map.resize(degree);
        for (std::uint32_t i = 0; i < degree; ++i) p.map[i] = i;
        return p;
    }

    std::size_t degree() const { return map.size(); }
    std::uint32_t operator()(std::uint32_t i) const { return map[i]; }
    bool is_identity() const {
        for (std::uint32_t i = 0; i < map.size(); ++i)
            if (map[i] != i) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Product applying `a` first, then `b`: (a * b)(x) = b(a(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw input_error("composing permutations of different degree");
    Permutation out;
    out.map.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) out.map[i] = b.map[a.map[i]];
    return out;
}

inline Permutation inverse(const Permutation& p) {
    Permutation out;
    out.map.resize(p.degree());
    for (std::uint32_t i = 0; i < p.degree(); ++i) out.map[p.map[i]] = i;
    return out;
}

/// Parses 1-based cycle notation such as "(2,4)(6,12,17)"; "()" and the
/// empty string are the identity. Whitespace is ignored.
inline Permutation parse_permutation(std::string_view s, std::size_t degree) {
    Permutation p = Permutation::identity(degree);
    std::vector<bool> seen(degree, false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> void {
        throw input_error("bad cycle notation at offset " + std::to_string(pos) + ": " + why);
    };
    skip();
    while (pos < s.size()) {
        if (s[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<std::uint32_t> cycle;
        skip();
        if (pos < s.size() && s[pos] == ')') {
            ++pos;
            skip();
            continue;
        }
        for (;;) {
            skip();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a point");
            std::uint64_t x = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                x = x * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
                if (x > degree) break;
            }
            if (x < 1 || x > degree) fail("point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
            const auto v = static_cast<std::uint32_t>(x - 1);
            if (seen[v]) fail("point " + std::to_string(x) + " repeated");
            seen[v] = true;
            cycle.push_back(v);
            skip();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            fail("expected ',' or ')'");
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) p.map[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    return p;
}

/// 1-based cycle notation without fixed points; "()" for the identity.
inline std::string to_cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.degree(), false);
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
        if (done[i] || p.map[i] == i) continue;
        out += "(";
        for (std::uint32_t x = i; !done[x]; x = p.map[x]) {
            if (x != i) out += ",";
            out += std::to_string(x + 1);
            done[x] = true;
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

} // namespace soltes
