#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pgg {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

// Immutable digraph on dense vertex ids 0..n-1. No self-loops, no parallel
// arcs. Adjacency lists are kept sorted ascending so every traversal is
// deterministic.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
    int min_out_degree() const;
    int max_out_degree() const;

    bool has_arc(Vertex u, Vertex v) const;

    // Arcs sorted by (tail, head).
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Underlying undirected edges (u < v), opposite arc pairs collapsed.
    std::vector<Arc> underlying_edges() const;

    // Subgraph induced on the vertices where keep[v] is true. Vertex ids are
    // compacted; orig_ids (when given) receives the new->old id map.
    Digraph induced(const std::vector<char>& keep,
                    std::vector<Vertex>* orig_ids = nullptr) const;

    bool operator==(const Digraph& other) const = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_, in_;
};

struct SccDecomposition {
    std::vector<int> component_of;                // per vertex
    std::vector<std::vector<Vertex>> components;  // each sorted ascending
    std::vector<char> terminal;                   // per component: no out-arc leaves it
};

SccDecomposition strongly_connected_components(const Digraph& g);

bool is_strong(const Digraph& g);

// Underlying-graph bipartiteness. On failure, odd_cycle (when non-null)
// receives the vertices of an odd closed walk in the underlying graph.
bool is_underlying_bipartite(const Digraph& g, std::vector<Vertex>* odd_cycle = nullptr);

bool is_acyclic(const Digraph& g);

}  // namespace pgg
