#pragma once

#include "pgg/game.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pgg {

// 3-uniform hypergraph (each edge an unordered triple of distinct vertices).
struct Hypergraph3 {
    int n = 0;
    std::vector<std::array<Vertex, 3>> edges;  // each triple sorted ascending

    void validate(bool forbid_isolated = false) const;
};

struct LabeledInstance {
    GameInstance instance;
    std::vector<std::string> names;  // per vertex; bijective with ids
    std::string family;
    std::string parameters;
};

// C_n with arcs i -> i+1 mod n.
LabeledInstance gen_cycle(int n);
// All n(n-1) ordered pairs.
LabeledInstance gen_complete(int n);
// Seeded G(n, arc_prob) digraph, reproducible across platforms (mt19937).
LabeledInstance gen_random(int n, double arc_prob, unsigned seed);

// Complete k-ary out-tree with r levels; level l holds k^(l-1) vertices in
// BFS order, names x_l^j.
LabeledInstance gen_out_tree(int k, int r);

// The k-regular mixed-PoS family: 2r+1 independent blocks of size k+1, all
// arcs between consecutive blocks, minus a fixed round-robin Hamilton cycle.
LabeledInstance gen_dkr(int k, int r);

// k = 1 hardness gadget: every sink x of d gains the 3-cycle x -> u_x ->
// v_x -> x. The result has a 1-pure-Nash set iff d has a spanning r-galaxy.
LabeledInstance gadget_galaxy(const Digraph& d);

// k >= 2 hardness gadget over a 3-uniform hypergraph: edge vertices feed
// their hypergraph vertices plus k-1 private Z-sinks, V feeds a padding
// block X of size k(|V|-r), and every Z/X vertex carries a 5-arc widget
// whose tail t_q points back at all edges. The output is strong and has a
// k-pure-Nash set iff h has a transversal of size <= r.
LabeledInstance gadget_transversal(const Hypergraph3& h, int r, int k);

struct TransversalResult {
    bool exists = false;
    std::vector<Vertex> witness;
};

// Exhaustive transversal-of-size-<=-r check, |V| <= 20.
TransversalResult transversal_brute_force(const Hypergraph3& h, int r);

}  // namespace pgg
