#pragma once

#include "pgg/digraph.hpp"

#include <map>
#include <vector>

namespace pgg {

// Generic integer max-flow (Dinic). Small fixed-size networks only.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : graph_(n) {}

    // Returns the index of the forward edge; the reverse edge is idx ^ 1.
    int add_edge(int from, int to, int capacity);

    int max_flow(int source, int sink);

    int flow_on(int edge_index) const { return edges_[edge_index].flow; }

private:
    struct Edge {
        int to, cap, flow;
    };
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> graph_;
    std::vector<int> level_, iter_;

    bool build_levels(int source, int sink);
    int push(int v, int sink, int limit);
};

struct CoverageResult {
    int flow_value = 0;
    bool covers_all = false;
    // Present only when covers_all: target -> assigned buyer.
    std::map<Vertex, Vertex> assignment;
};

// Maximum flow through source -> buyers (cap = buyer_caps[b]) -> targets
// (cap 1 per cover arc) -> sink (cap 1 per target). When the value reaches
// |targets|, the witness assignment maps each target to a distinct-use buyer.
CoverageResult max_flow_coverage(const std::map<Vertex, int>& buyer_caps,
                                 const std::vector<Arc>& cover_arcs,
                                 const std::vector<Vertex>& targets);

}  // namespace pgg
