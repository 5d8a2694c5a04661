#include <gtest/gtest.h>

#include <random>

#include <json.hpp>

#include "oracle.hpp"
#include "soltes/families.hpp"
#include "soltes/graph6.hpp"
#include "soltes/permutation.hpp"
#include "soltes/report.hpp"

using namespace soltes;

TEST(Graph6, FixedVectors) {
    EXPECT_EQ(decode_graph6("@"), Graph(1));
    EXPECT_EQ(decode_graph6("A_"), complete(2));
    EXPECT_EQ(decode_graph6("A?"), Graph(2));
    EXPECT_EQ(encode_graph6(Graph(1)), "@");
    EXPECT_EQ(encode_graph6(complete(2)), "A_");
    EXPECT_EQ(encode_graph6(Graph(2)), "A?");
    EXPECT_EQ(encode_graph6(Graph(0)), "?");
}

TEST(Graph6, KnownEncodings) {
    // K4: six 1-bits -> 63 + 63 = '~'.
    EXPECT_EQ(encode_graph6(complete(4)), "C~");
    // Pairs in column order for C5: (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) (0,4) ...
    // edges 01 12 23 34 04 -> bits 1 0 1 0 0 1 | 1 0 0 1 -> 41+63, 36+63.
    EXPECT_EQ(encode_graph6(cycle(5)), "Dhc");
}

TEST(Graph6, LongSizeFields) {
    Graph g = path(63);
    std::string s = encode_graph6(g);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(decode_graph6(s), g);
    // n = 100 in the 18-bit form: 0 1 36 -> "?@c".
    EXPECT_EQ(encode_graph6(Graph(100)).substr(0, 4), "~?@c");
    EXPECT_EQ(decode_graph6(encode_graph6(Graph(100))).order(), 100u);
    // 36-bit form with n = 258048 = 63 * 4096 but no body.
    EXPECT_THROW(decode_graph6("~~???~??"), input_error);
}

TEST(Graph6, HeaderAndLineEndAreAccepted) {
    const std::string bare = encode_graph6(cycle(7));
    EXPECT_EQ(decode_graph6(">>graph6<<" + bare), decode_graph6(bare));
    EXPECT_EQ(decode_graph6(bare + "\n"), cycle(7));
}

TEST(Graph6, Errors) {
    EXPECT_THROW(decode_graph6(""), input_error);
    EXPECT_THROW(decode_graph6("A"), input_error);         // truncated body
    EXPECT_THROW(decode_graph6("A__"), input_error);       // body too long
    EXPECT_THROW(decode_graph6("A\x7f"), input_error);     // byte out of range
    EXPECT_THROW(decode_graph6("A "), input_error);        // trailing space is stripped, body missing
    EXPECT_THROW(decode_graph6("A@"), input_error);        // padding bit set
    EXPECT_THROW(decode_graph6("~~??C???"), input_error);  // order 2^20 > cap
}

TEST(Graph6, RandomRoundTrip) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t n = 1 + rng() % 100;
        Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0, 1)(rng));
        const std::string s = encode_graph6(g);
        for (char c : s) {
            EXPECT_GE(static_cast<unsigned char>(c), 63);
            EXPECT_LE(static_cast<unsigned char>(c), 126);
        }
        ASSERT_EQ(decode_graph6(s), g);
        EXPECT_EQ(encode_graph6(decode_graph6(s)), s);
    }
}

TEST(Permutation, Examples) {
    Permutation p = parse_permutation("(2,9)(3,4)(5,7)(6,8)", 9);
    EXPECT_EQ(p.map, (std::vector<std::uint32_t>{0, 8, 3, 2, 6, 7, 4, 5, 1}));
    EXPECT_EQ(compose(p, p), Permutation::identity(9));
    EXPECT_EQ(parse_permutation("()", 5), Permutation::identity(5));
    Permutation c = parse_permutation("(1,2,3)", 3);
    EXPECT_EQ(c.map, (std::vector<std::uint32_t>{1, 2, 0}));
    EXPECT_EQ(compose(compose(c, c), c), Permutation::identity(3));
}

TEST(Permutation, CompositionAppliesLeftFactorFirst) {
    Permutation a = parse_permutation("(1,2)", 3), b = parse_permutation("(2,3)", 3);
    // 1 -a-> 2 -b-> 3
    EXPECT_EQ(compose(a, b)(0), 2u);
}

TEST(Permutation, Errors) {
    EXPECT_THROW(parse_permutation("(1,2,1)", 3), input_error);
    EXPECT_THROW(parse_permutation("(1,2)(2,3)", 3), input_error);
    EXPECT_THROW(parse_permutation("(1,4)", 3), input_error);
    EXPECT_THROW(parse_permutation("(0,1)", 3), input_error);
    EXPECT_THROW(parse_permutation("(1,2", 3), input_error);
    EXPECT_THROW(parse_permutation("1,2)", 3), input_error);
    EXPECT_THROW(parse_permutation("(1;2)", 3), input_error);
    EXPECT_THROW(parse_permutation("(12345678901234567890)", 3), input_error);
}

TEST(Permutation, ComposedWithParsedInverseIsIdentity) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng() % 40;
        Permutation p;
        for (auto v : oracle::random_permutation(rng, n)) p.map.push_back(v);
        const std::string text = to_cycle_notation(p);
        EXPECT_EQ(parse_permutation(text, n), p);
        Permutation inv = parse_permutation(to_cycle_notation(inverse(p)), n);
        EXPECT_EQ(compose(p, inv), Permutation::identity(n));
        EXPECT_EQ(compose(inv, p), Permutation::identity(n));
    }
}

TEST(Report, FieldsAndOrder) {
    const std::string line = write_report(soltes_report(cycle(11)), "C11");
    EXPECT_EQ(line.find('\n'), std::string::npos);
    auto j = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"id", "n", "wiener", "soltes_count", "soltes_vertices", "alpha"}));
    EXPECT_EQ(j["id"], "C11");
    EXPECT_EQ(j["n"], 11);
    EXPECT_EQ(j["wiener"], 165);
    EXPECT_EQ(j["soltes_count"], 11);
    EXPECT_EQ(j["alpha"], "1/1");
}

TEST(Report, AlphaFormatting) {
    auto k7 = nlohmann::json::parse(write_report(soltes_report(complete(7)), "K7"));
    EXPECT_EQ(k7["soltes_count"], 0);
    EXPECT_EQ(k7["alpha"], "0/7");
    EXPECT_EQ(format_ratio({8, 24}), "1/3");
    EXPECT_EQ(format_ratio({2, 50}), "1/25");
}
