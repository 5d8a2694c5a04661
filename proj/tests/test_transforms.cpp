#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "soltes/builder.hpp"
#include "soltes/canonical.hpp"
#include "soltes/enumerate.hpp"
#include "soltes/families.hpp"
#include "soltes/transforms.hpp"

using namespace soltes;

namespace {

Graph octahedron() {
    std::vector<Edge> e;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            if (v != u + 3) e.push_back({u, v});
    return Graph::from_edges(6, e);
}

Graph prism() {
    return Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

} // namespace

TEST(Truncate, K4) {
    const Graph t = truncate(complete(4));
    EXPECT_EQ(t.order(), 12u);
    EXPECT_EQ(t.size(), 18u);
    EXPECT_EQ(oracle::girth(t), std::optional<std::int64_t>(3));
    for (Vertex v = 0; v < t.order(); ++v) EXPECT_EQ(t.degree(v), 3u);
    EXPECT_TRUE(oracle::connected(t));
}

TEST(Truncate, CubicGraphsGiveGirthThreeAndTripleOrder) {
    std::vector<Graph> inputs = gen_regular(10, 3);
    inputs.push_back(complete_bipartite(3, 3));
    inputs.push_back(build_two_soltes(3).graph);
    for (const Graph& g : inputs) {
        const Graph t = truncate(g);
        EXPECT_EQ(t.order(), 3 * g.order());
        EXPECT_EQ(t.size(), 3 * g.order() + g.size());
        EXPECT_EQ(girth(t), std::optional<std::int64_t>(3));
        for (Vertex v = 0; v < t.order(); ++v) EXPECT_EQ(t.degree(v), 3u);
        EXPECT_EQ(is_connected(t), is_connected(g));
    }
}

TEST(Truncate, RejectsNonCubic) {
    EXPECT_THROW(truncate(cycle(5)), domain_error);
    EXPECT_THROW(truncate(complete(5)), domain_error);
}

TEST(LineGraph, Examples) {
    for (std::size_t n = 3; n <= 20; ++n) EXPECT_EQ(canonical_form(line_graph(cycle(n))), canonical_form(cycle(n))) << n;
    EXPECT_TRUE(oracle::isomorphic(line_graph(complete(4)), octahedron()));
    EXPECT_EQ(canonical_form(line_graph(path(5))), canonical_form(path(4)));
    EXPECT_EQ(line_graph(Graph(3)).order(), 0u);
    // The line graph of a star is complete.
    EXPECT_EQ(line_graph(complete_bipartite(1, 5)), complete(5));
    EXPECT_TRUE(oracle::isomorphic(line_graph(prism()), line_graph(prism())));
}

TEST(LineGraph, DegreeAndEdgeCounts) {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 200; ++rep) {
        const Graph g = oracle::random_graph(rng, 2 + rng() % 25, 0.3);
        const Graph l = line_graph(g);
        ASSERT_EQ(l.order(), g.size());
        std::size_t expected = 0;
        for (Vertex v = 0; v < g.order(); ++v) expected += g.degree(v) * (g.degree(v) - 1) / 2;
        EXPECT_EQ(l.size(), expected);
        const auto es = g.edges();
        for (std::size_t k = 0; k < es.size(); ++k)
            EXPECT_EQ(l.degree(static_cast<Vertex>(k)), g.degree(es[k].u) + g.degree(es[k].v) - 2);
        for (std::size_t a = 0; a < es.size(); ++a)
            for (std::size_t b = a + 1; b < es.size(); ++b) {
                const bool share = es[a].u == es[b].u || es[a].u == es[b].v || es[a].v == es[b].u || es[a].v == es[b].v;
                EXPECT_EQ(l.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)), share);
            }
    }
}

TEST(LineGraph, RegularInputs) {
    for (const Graph& g : gen_regular(9, 4)) {
        const Graph l = line_graph(g);
        for (Vertex v = 0; v < l.order(); ++v) EXPECT_EQ(l.degree(v), 6u);
    }
}
