#include "pgg/matching.hpp"

#include "pgg/errors.hpp"

#include <algorithm>
#include <queue>

namespace pgg {

namespace {

// Edmonds blossom on an adjacency-list undirected graph, O(V^3).
class Blossom {
public:
    explicit Blossom(int n) : n_(n), adj_(n) {}

    void add_edge(Vertex u, Vertex v) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    std::vector<Vertex> solve() {
        mate_.assign(n_, -1);
        for (Vertex v = 0; v < n_; ++v)
            if (mate_[v] == -1) augment_from(v);
        return mate_;
    }

private:
    int n_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Vertex> mate_, parent_, base_;
    std::vector<char> used_, blossom_;

    Vertex lca(Vertex a, Vertex b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child, std::queue<Vertex>& q) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            if (!used_[mate_[v]]) {
                used_[mate_[v]] = 1;
                q.push(mate_[v]);
            }
            v = parent_[mate_[v]];
        }
    }

    Vertex find_augmenting_path(Vertex root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) base_[v] = v;
        used_[root] = 1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    Vertex cur = lca(v, to);
                    blossom_.assign(n_, 0);
                    mark_path(v, cur, to, q);
                    mark_path(to, cur, v, q);
                    for (Vertex i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used_[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    void augment_from(Vertex root) {
        Vertex v = find_augmenting_path(root);
        if (v == -1) return;
        while (v != -1) {
            Vertex pv = parent_[v], ppv = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = ppv;
        }
    }
};

Matching matching_of_edges(int n, const std::vector<Arc>& edges) {
    Blossom b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    Matching m;
    m.mate = b.solve();
    for (Vertex v = 0; v < n; ++v)
        if (m.mate[v] > v) m.edges.push_back({v, m.mate[v]});
    return m;
}

}  // namespace

Matching maximum_matching(const Digraph& g) {
    return matching_of_edges(g.vertex_count(), g.underlying_edges());
}

bool has_perfect_matching_minus_each_vertex(const Digraph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0)
        throw ValidationError("has_perfect_matching_minus_each_vertex expects odd n");
    auto edges = g.underlying_edges();
    for (Vertex drop = 0; drop < n; ++drop) {
        std::vector<Arc> sub;
        for (auto [u, v] : edges)
            if (u != drop && v != drop) sub.push_back({u, v});
        if (matching_of_edges(n, sub).size() != (n - 1) / 2) return false;
    }
    return true;
}

}  // namespace pgg
