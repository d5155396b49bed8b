#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "wp/enumerate.hpp"
#include "wp/graph6.hpp"

using namespace wp;

TEST_CASE("graph6 decode of known records") {
    CHECK(from_graph6("Dhc") == cycle(5));
    CHECK(from_graph6("@") == complete(1));
    CHECK(from_graph6("Ch") == path(4));
    CHECK(from_graph6("?").n() == 0);
}

TEST_CASE("graph6 encode of known graphs") {
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(to_graph6(complete(1)) == "@");
    CHECK(to_graph6(path(4)) == "Ch");
}

TEST_CASE("graph6 round-trip over every graph with n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : gen::all_graphs(n)) CHECK(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 round-trip on random graphs, including the long form") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng() % 80);  // crosses the 62-vertex short-form limit
        Graph g = wptest::random_graph(rng, n, 0.2);
        std::string rec = to_graph6(g);
        if (n <= 62) CHECK(rec.size() == 1 + size_t((n * (n - 1) / 2 + 5) / 6));
        else CHECK(rec.size() == 4 + size_t((n * (n - 1) / 2 + 5) / 6));
        CHECK(from_graph6(rec) == g);
    }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);

    // truncated payload: C_5 needs two payload bytes
    CHECK_THROWS_AS(from_graph6("Dh"), ParseError);

    // trailing data
    CHECK_THROWS_AS(from_graph6("Dhcc"), ParseError);

    // byte below 63
    try {
        from_graph6("D C");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }

    // nonzero padding: C_5 uses 10 of 12 payload bits; flipping the lowest
    // bit of the final byte ('c' -> 'd') lands in the padding
    try {
        from_graph6("Dhd");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }

    // 8-byte length form is beyond the cap
    CHECK_THROWS_AS(from_graph6("~~?????Bw"), ParseError);
}

TEST_CASE("edge list format") {
    Graph g = from_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == path(4));
    CHECK(from_edge_list("1 0").n() == 1);
    CHECK_THROWS_AS(from_edge_list(""), ParseError);
    CHECK_THROWS_AS(from_edge_list("2 1"), ParseError);            // missing edge
    CHECK_THROWS_AS(from_edge_list("2 1 0 0"), ParseError);        // loop
    CHECK_THROWS_AS(from_edge_list("2 2 0 1 1 0"), ParseError);    // duplicate
    CHECK_THROWS_AS(from_edge_list("2 1 0 5"), ParseError);        // out of range
}
