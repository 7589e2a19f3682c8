#include "pgg/flow.hpp"

#include <algorithm>
#include <queue>

namespace pgg {

int FlowNetwork::add_edge(int from, int to, int capacity) {
    int idx = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity, 0});
    graph_[from].push_back(idx);
    edges_.push_back({from, 0, 0});
    graph_[to].push_back(idx + 1);
    return idx;
}

bool FlowNetwork::build_levels(int source, int sink) {
    level_.assign(graph_.size(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int idx : graph_[v]) {
            const Edge& e = edges_[idx];
            if (e.cap - e.flow > 0 && level_[e.to] == -1) {
                level_[e.to] = level_[v] + 1;
                q.push(e.to);
            }
        }
    }
    return level_[sink] != -1;
}

int FlowNetwork::push(int v, int sink, int limit) {
    if (v == sink) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
        int idx = graph_[v][i];
        Edge& e = edges_[idx];
        if (e.cap - e.flow > 0 && level_[e.to] == level_[v] + 1) {
            int pushed = push(e.to, sink, std::min(limit, e.cap - e.flow));
            if (pushed > 0) {
                e.flow += pushed;
                edges_[idx ^ 1].flow -= pushed;
                return pushed;
            }
        }
    }
    return 0;
}

int FlowNetwork::max_flow(int source, int sink) {
    int total = 0;
    while (build_levels(source, sink)) {
        iter_.assign(graph_.size(), 0);
        while (int pushed = push(source, sink, 1 << 30)) total += pushed;
    }
    return total;
}

CoverageResult max_flow_coverage(const std::map<Vertex, int>& buyer_caps,
                                 const std::vector<Arc>& cover_arcs,
                                 const std::vector<Vertex>& targets) {
    // Node layout: 0 = source, 1 = sink, then buyers, then targets.
    std::map<Vertex, int> buyer_node, target_node;
    int next = 2;
    for (const auto& [b, cap] : buyer_caps) buyer_node[b] = next++;
    for (Vertex t : targets) target_node[t] = next++;

    FlowNetwork net(next);
    for (const auto& [b, cap] : buyer_caps) net.add_edge(0, buyer_node[b], cap);
    std::vector<std::pair<Arc, int>> arc_edges;
    for (auto [b, t] : cover_arcs) {
        auto bi = buyer_node.find(b);
        auto ti = target_node.find(t);
        if (bi == buyer_node.end() || ti == target_node.end()) continue;
        arc_edges.push_back({{b, t}, net.add_edge(bi->second, ti->second, 1)});
    }
    for (Vertex t : targets) net.add_edge(target_node[t], 1, 1);

    CoverageResult res;
    res.flow_value = net.max_flow(0, 1);
    res.covers_all = res.flow_value == static_cast<int>(targets.size());
    if (res.covers_all)
        for (const auto& [arc, idx] : arc_edges)
            if (net.flow_on(idx) > 0) res.assignment[arc.second] = arc.first;
    return res;
}

}  // namespace pgg
