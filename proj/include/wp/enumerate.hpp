#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wp/graph.hpp"

namespace wp::gen {

// Canonical form for graphs on n <= 11 vertices: the lexicographically
// greatest upper-triangle bit string over all vertex orderings, packed
// column-major into a 64-bit key (the same bit order graph6 uses). Two
// graphs are isomorphic iff their keys agree.
uint64_t canonical_key(const Graph& g);

Graph from_key(int n, uint64_t key);

// One canonical representative per isomorphism class, in increasing key
// order. Built level by level: every graph on n vertices arises from some
// graph on n-1 vertices by adding one vertex with an arbitrary neighborhood.
std::vector<uint64_t> all_keys(int n);
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

// graph6 records for every graph (or every connected graph) with
// min_n <= n <= max_n, smallest order first.
std::vector<std::string> graph6_stream(int min_n, int max_n, bool connected_only);

}  // namespace wp::gen
