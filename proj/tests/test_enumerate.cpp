#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "wp/enumerate.hpp"
#include "wp/graph6.hpp"

using namespace wp;

TEST_CASE("canonical key is a relabeling invariant") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = wptest::random_graph(rng, 1 + int(rng() % 9), 0.15 + 0.1 * double(rng() % 7));
        uint64_t key = gen::canonical_key(g);
        for (int r = 0; r < 4; ++r)
            CHECK(gen::canonical_key(wptest::random_relabel(rng, g)) == key);
        // the representative reconstructed from the key maps back to itself
        CHECK(gen::canonical_key(gen::from_key(g.n(), key)) == key);
    }
}

TEST_CASE("canonical key separates the small classics") {
    CHECK(gen::canonical_key(path(4)) != gen::canonical_key(star(3)));
    CHECK(gen::canonical_key(cycle(5)) != gen::canonical_key(path(5)));
    CHECK(gen::canonical_key(cycle(6)) != gen::canonical_key(complete_multipartite({3, 3})));
}

TEST_CASE("graph counts match the published values") {
    // numbers of graphs (and connected graphs) on n unlabeled vertices
    const long all[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    const long connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(long(gen::all_graphs(n).size()) == all[n]);
        CHECK(long(gen::all_connected_graphs(n).size()) == connected[n]);
    }
}

TEST_CASE("every labeled 5-vertex graph is represented") {
    auto keys = gen::all_keys(5);
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = wptest::random_graph(rng, 5, 0.5);
        uint64_t key = gen::canonical_key(g);
        CHECK(std::binary_search(keys.begin(), keys.end(), key));
    }
}

TEST_CASE("graph6 stream is well-formed and ordered by n") {
    auto stream = gen::graph6_stream(1, 5, true);
    CHECK(stream.size() == 1 + 1 + 2 + 6 + 21);
    int last_n = 0;
    for (const auto& rec : stream) {
        Graph g = from_graph6(rec);
        CHECK(g.is_connected());
        CHECK(g.n() >= last_n);
        last_n = g.n();
    }
}
