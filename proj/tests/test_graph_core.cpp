#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "soltes/distance.hpp"
#include "soltes/families.hpp"
#include "soltes/invariants.hpp"

using namespace soltes;

namespace {

Graph two_edges() { return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}); }

std::vector<std::int32_t> dists(const Graph& g, Vertex s) { return bfs_distances(g, s).dist; }

} // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), input_error);
    EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), input_error);
    EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), input_error);
}

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = oracle::random_graph(rng, 1 + rng() % 30, 0.3);
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            auto nb = g.neighbors(v);
            degree_sum += nb.size();
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (i) EXPECT_LT(nb[i - 1], nb[i]);
                EXPECT_NE(nb[i], v);
                EXPECT_TRUE(g.adjacent(nb[i], v));
            }
        }
        EXPECT_EQ(degree_sum, 2 * g.size());
    }
}

TEST(Bfs, Examples) {
    EXPECT_EQ(dists(cycle(5), 0), (std::vector<std::int32_t>{0, 1, 2, 2, 1}));
    auto k7 = dists(complete(7), 0);
    for (Vertex v = 1; v < 7; ++v) EXPECT_EQ(k7[v], 1);
    auto d = bfs_distances(two_edges(), 0);
    EXPECT_FALSE(d.reachable(2));
    EXPECT_FALSE(d.reachable(3));
    EXPECT_EQ(d.dist[1], 1);
    EXPECT_THROW(bfs_distances(cycle(5), 5), input_error);
}

TEST(Bfs, EdgesChangeDistanceByAtMostOne) {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = oracle::random_graph(rng, 2 + rng() % 40, 0.08);
        auto d = bfs_distances(g, 0);
        EXPECT_EQ(d.dist[0], 0);
        for (const Edge& e : g.edges())
            if (d.reachable(e.u) && d.reachable(e.v)) EXPECT_LE(std::abs(d.dist[e.u] - d.dist[e.v]), 1);
    }
}

TEST(Wiener, Examples) {
    EXPECT_EQ(wiener(complete(7)).value(), 21);
    EXPECT_EQ(wiener(cycle(11)).value(), 11 * (11 * 11 - 1) / 8);
    EXPECT_EQ(wiener(cycle(11)).value(), *oracle::wiener(cycle(11)));
    EXPECT_EQ(wiener(wheel(8).graph).value(), 42);
    EXPECT_FALSE(wiener(two_edges()).finite());
    EXPECT_EQ(wiener(Graph(1)).value(), 0);
    EXPECT_EQ(wiener(Graph(0)).value(), 0);
    EXPECT_THROW(wiener(two_edges()).value(), std::logic_error);
}

TEST(Wiener, MatchesFloydWarshallAcrossLaneWidths) {
    std::mt19937_64 rng(3);
    for (std::size_t n : {2, 5, 17, 63, 64, 65, 100, 128, 129, 200, 260, 300}) {
        Graph g = oracle::random_connected(rng, n, 3.0 / static_cast<double>(n));
        EXPECT_EQ(wiener(g).value(), *oracle::wiener(g)) << "n=" << n;
        Graph h = oracle::random_graph(rng, n, 1.0 / static_cast<double>(n));
        auto expect = oracle::wiener(h);
        EXPECT_EQ(wiener(h).finite(), expect.has_value()) << "n=" << n;
        if (expect) EXPECT_EQ(wiener(h).value(), *expect);
    }
}

TEST(Wiener, SweepAndPerSourceAgree) {
    std::mt19937_64 rng(4);
    for (std::size_t n : {3, 40, 64, 65, 130, 257}) {
        const Graph g = oracle::random_connected(rng, n, 2.5 / static_cast<double>(n));
        const std::int64_t scalar = detail::scalar_distance_sum(g);
        EXPECT_EQ(detail::ordered_distance_sum<1>(g), std::optional<std::int64_t>(scalar));
        EXPECT_EQ(detail::ordered_distance_sum<4>(g), std::optional<std::int64_t>(scalar));
    }
    // Long paths and cycles take the per-source route.
    for (std::size_t n : {70, 150, 301}) {
        EXPECT_EQ(wiener(path(n)).value(), static_cast<std::int64_t>((n + 1) * n * (n - 1) / 6));
        EXPECT_EQ(wiener(cycle(n)).value(), *oracle::wiener(cycle(n)));
    }
}

TEST(Transmission, Examples) {
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(transmission(cycle(10), v).value(), 25);
    LabeledGraph wh = wheel(8);
    EXPECT_EQ(transmission(wh.graph, wh.at("hub")).value(), 7);
    EXPECT_EQ(transmission(complete(7), 3).value(), 6);
}

TEST(Transmission, SumsToTwiceWiener) {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = oracle::random_connected(rng, 2 + rng() % 60, 0.05);
        std::int64_t sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) sum += transmission(g, v).value();
        EXPECT_EQ(sum, 2 * wiener(g).value());
    }
}

TEST(DeleteVertex, Examples) {
    LabeledGraph wh = wheel(8);
    EXPECT_EQ(delete_vertex(wh.graph, wh.at("hub")), cycle(7));
    EXPECT_EQ(delete_vertex(complete(7), 4), complete(6));
    for (Vertex v = 0; v < 11; ++v) {
        Graph h = delete_vertex(cycle(11), v);
        EXPECT_TRUE(is_connected(h));
        EXPECT_EQ(h.size(), 9u);
        EXPECT_EQ(profile(h).degrees, profile(path(10)).degrees);
    }
    EXPECT_EQ(delete_vertex(cycle(11), 0), path(10));
    EXPECT_THROW(delete_vertex(cycle(4), 4), input_error);
}

TEST(DeleteVertex, DistancesNeverShrink) {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = oracle::random_connected(rng, 3 + rng() % 12, 0.25);
        const Vertex v = static_cast<Vertex>(rng() % g.order());
        Graph h = delete_vertex(g, v);
        auto dg = oracle::floyd_warshall(g);
        auto dh = oracle::floyd_warshall(h);
        for (Vertex x = 0; x < h.order(); ++x)
            for (Vertex y = 0; y < h.order(); ++y) EXPECT_GE(dh[x][y], dg[x + (x >= v)][y + (y >= v)]);
        if (is_connected(h))
            EXPECT_GE(wiener(h).value(), wiener(g).value() - transmission(g, v).value());
    }
}

TEST(SoltesReport, Examples) {
    SoltesReport c11 = soltes_report(cycle(11));
    EXPECT_EQ(c11.soltes_set.size(), 11u);
    EXPECT_EQ(c11.alpha, (Ratio{11, 11}));
    LabeledGraph wh = wheel(8);
    SoltesReport w = soltes_report(wh.graph);
    EXPECT_TRUE(std::find(w.soltes_set.begin(), w.soltes_set.end(), wh.at("hub")) != w.soltes_set.end());
    SoltesReport k7 = soltes_report(complete(7));
    EXPECT_TRUE(k7.soltes_set.empty());
    EXPECT_EQ(k7.per_vertex[0].value(), 15);
    EXPECT_THROW(soltes_report(two_edges()), domain_error);
}

TEST(SoltesReport, CutVertexIsInfiniteAndNeverSoltes) {
    SoltesReport p = soltes_report(path(5));
    EXPECT_FALSE(p.per_vertex[2].finite());
    EXPECT_TRUE(std::find(p.soltes_set.begin(), p.soltes_set.end(), 2u) == p.soltes_set.end());
}

TEST(SoltesReport, MatchesBruteForceOnSmallGraphs) {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 400; ++rep) {
        Graph g = oracle::random_connected(rng, 1 + rng() % 8, 0.3);
        SoltesReport r = soltes_report(g);
        EXPECT_EQ(r.soltes_set, oracle::soltes_set(g));
        EXPECT_EQ(r.alpha.num, static_cast<std::int64_t>(r.soltes_set.size()));
        EXPECT_EQ(r.alpha.den, static_cast<std::int64_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            auto expect = oracle::wiener(oracle::remove(g, v));
            ASSERT_EQ(r.per_vertex[v].finite(), expect.has_value());
            if (expect) EXPECT_EQ(r.per_vertex[v].value(), *expect);
        }
    }
}

TEST(SoltesReport, ThreadCountDoesNotChangeResult) {
    std::mt19937_64 rng(7);
    Graph g = oracle::random_connected(rng, 90, 0.03);
    SoltesReport a = soltes_report(g, 1), b = soltes_report(g, 4);
    EXPECT_EQ(a.soltes_set, b.soltes_set);
    EXPECT_EQ(a.per_vertex, b.per_vertex);
}

TEST(SoltesReport, ElevenIsTheOnlySoltesCycle) {
    for (std::size_t n = 3; n <= 200; ++n) {
        const bool all = soltes_report(cycle(n)).soltes_set.size() == n;
        EXPECT_EQ(all, n == 11) << "n=" << n;
        EXPECT_EQ(wiener(cycle(n)) == wiener(path(n - 1)), n == 11);
    }
}

TEST(Connectivity, Examples) {
    EXPECT_TRUE(is_connected(cycle(5)));
    EXPECT_FALSE(is_connected(two_edges()));
    EXPECT_TRUE(is_connected(Graph(1)));
    EXPECT_TRUE(is_biconnected(cycle(4)));
    EXPECT_FALSE(is_biconnected(path(3)));
    EXPECT_FALSE(is_biconnected(g_t(3).graph));
}

TEST(Connectivity, BiconnectedMatchesBruteForce) {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 400; ++rep) {
        Graph g = oracle::random_graph(rng, 1 + rng() % 10, 0.35);
        EXPECT_EQ(is_connected(g), oracle::connected(g));
        EXPECT_EQ(is_biconnected(g), oracle::biconnected(g));
    }
}

TEST(Profile, Examples) {
    Profile c = profile(cycle(11));
    EXPECT_EQ(c.girth, 11);
    EXPECT_EQ(c.diameter, 5);
    EXPECT_FALSE(c.bipartite);
    EXPECT_EQ(c.regular, 2u);
    Profile k = profile(complete_bipartite(3, 3));
    EXPECT_EQ(k.girth, 4);
    EXPECT_EQ(k.diameter, 2);
    EXPECT_TRUE(k.bipartite);
    EXPECT_EQ(k.regular, 3u);
    Profile p = profile(path(4));
    EXPECT_FALSE(p.girth.has_value());
    EXPECT_FALSE(profile(two_edges()).diameter.has_value());
    EXPECT_EQ(p.degrees, (std::vector<std::size_t>{1, 1, 2, 2}));
    EXPECT_FALSE(p.regular.has_value());
}

TEST(Profile, GirthAndDiameterMatchBruteForce) {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g = oracle::random_graph(rng, 1 + rng() % 8, 0.4);
        EXPECT_EQ(girth(g), oracle::girth(g));
        EXPECT_EQ(diameter(g), oracle::diameter(g));
    }
}

TEST(ContractSet, Examples) {
    EXPECT_EQ(contract_set(complete(3), {0, 1}), complete(2));
    EXPECT_EQ(contract_set(complete(4), {2, 3}), complete(3));
    Graph star = complete_bipartite(1, 3);
    EXPECT_EQ(contract_set(star, {1, 2, 3}), complete(2));
    EXPECT_THROW(contract_set(star, {}), input_error);
}

TEST(ContractSet, MergedVertexTakesLowestIndex) {
    // Path 0-1-2-3-4; merging {1, 3} joins 0, 2, 4 to the merged vertex 1.
    Graph g = contract_set(path(5), {3, 1});
    EXPECT_EQ(g.order(), 4u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_TRUE(g.adjacent(1, 3));
    EXPECT_EQ(g.size(), 3u);
}
