#pragma once

#include "pgg/digraph.hpp"

#include <vector>

namespace pgg {

struct Matching {
    // Vertex-disjoint underlying edges (u < v), sorted.
    std::vector<Arc> edges;
    // mate[v] = matched partner or -1.
    std::vector<Vertex> mate;
    int size() const { return static_cast<int>(edges.size()); }
};

// Exact maximum matching of the underlying undirected graph (Edmonds blossom;
// opposite arc pairs count as one edge).
Matching maximum_matching(const Digraph& g);

// True iff the underlying graph of g - v has a perfect matching for every v.
// Requires odd n (even n makes the answer trivially false and signals a
// caller bug).
bool has_perfect_matching_minus_each_vertex(const Digraph& g);

}  // namespace pgg
