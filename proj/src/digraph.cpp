#include "pgg/digraph.hpp"

#include "pgg/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pgg {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
    if (n < 0) throw ValidationError("negative vertex count");
    std::sort(arcs.begin(), arcs.end());
    for (size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("arc endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (i > 0 && arcs[i] == arcs[i - 1])
            throw ValidationError("duplicate arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    arcs_ = std::move(arcs);
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& l : in_) std::sort(l.begin(), l.end());
    // out_ is already sorted because arcs_ is sorted by (tail, head)
}

int Digraph::min_out_degree() const {
    int d = n_ == 0 ? 0 : arc_count();
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, out_degree(v));
    return d;
}

int Digraph::max_out_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, out_degree(v));
    return d;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    const auto& l = out_[u];
    return std::binary_search(l.begin(), l.end(), v);
}

std::vector<Arc> Digraph::underlying_edges() const {
    std::set<Arc> edges;
    for (auto [u, v] : arcs_) edges.insert({std::min(u, v), std::max(u, v)});
    return {edges.begin(), edges.end()};
}

Digraph Digraph::induced(const std::vector<char>& keep, std::vector<Vertex>* orig_ids) const {
    std::vector<Vertex> new_id(n_, -1), old_id;
    for (Vertex v = 0; v < n_; ++v) {
        if (keep[v]) {
            new_id[v] = static_cast<Vertex>(old_id.size());
            old_id.push_back(v);
        }
    }
    std::vector<Arc> sub;
    for (auto [u, v] : arcs_)
        if (keep[u] && keep[v]) sub.push_back({new_id[u], new_id[v]});
    if (orig_ids) *orig_ids = old_id;
    return Digraph(static_cast<int>(old_id.size()), std::move(sub));
}

SccDecomposition strongly_connected_components(const Digraph& g) {
    // Iterative Tarjan; components come out in reverse topological order of
    // the condensation, then get renumbered so component ids follow the
    // lowest vertex id they contain.
    const int n = g.vertex_count();
    std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> raw_components;
    int next_index = 0;

    struct Frame {
        Vertex v;
        size_t next_child;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call_stack{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call_stack.empty()) {
            auto& fr = call_stack.back();
            const auto& outs = g.out_neighbors(fr.v);
            if (fr.next_child < outs.size()) {
                Vertex w = outs[fr.next_child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[fr.v] = std::min(lowlink[fr.v], index[w]);
                }
            } else {
                Vertex v = fr.v;
                call_stack.pop_back();
                if (!call_stack.empty())
                    lowlink[call_stack.back().v] = std::min(lowlink[call_stack.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::vector<Vertex> members;
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        members.push_back(w);
                    } while (w != v);
                    std::sort(members.begin(), members.end());
                    raw_components.push_back(std::move(members));
                }
            }
        }
    }

    // Renumber by lowest member id.
    std::vector<size_t> order(raw_components.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return raw_components[a][0] < raw_components[b][0];
    });
    SccDecomposition d;
    d.component_of.assign(n, -1);
    for (size_t rank = 0; rank < order.size(); ++rank) {
        d.components.push_back(raw_components[order[rank]]);
        for (Vertex v : d.components.back()) d.component_of[v] = static_cast<int>(rank);
    }
    d.terminal.assign(d.components.size(), 1);
    for (auto [u, v] : g.arcs())
        if (d.component_of[u] != d.component_of[v]) d.terminal[d.component_of[u]] = 0;
    return d;
}

bool is_strong(const Digraph& g) {
    if (g.vertex_count() == 0) throw ValidationError("is_strong needs n >= 1");
    return strongly_connected_components(g).components.size() == 1;
}

bool is_underlying_bipartite(const Digraph& g, std::vector<Vertex>* odd_cycle) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<Vertex> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            auto visit = [&](Vertex w) -> bool {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                    return true;
                }
                if (color[w] == color[u]) {
                    if (odd_cycle) {
                        // walk both endpoints up to a common ancestor
                        std::vector<Vertex> pu, pw;
                        for (Vertex a = u; a != -1; a = parent[a]) pu.push_back(a);
                        for (Vertex a = w; a != -1; a = parent[a]) pw.push_back(a);
                        while (pu.size() > 1 && pw.size() > 1 &&
                               pu[pu.size() - 2] == pw[pw.size() - 2]) {
                            pu.pop_back();
                            pw.pop_back();
                        }
                        odd_cycle->assign(pu.begin(), pu.end());
                        for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                            odd_cycle->push_back(*it);
                    }
                    return false;
                }
                return true;
            };
            for (Vertex w : g.out_neighbors(u))
                if (!visit(w)) return false;
            for (Vertex w : g.in_neighbors(u))
                if (!visit(w)) return false;
        }
    }
    return true;
}

bool is_acyclic(const Digraph& g) {
    for (const auto& comp : strongly_connected_components(g).components)
        if (comp.size() > 1) return false;
    return true;
}

}  // namespace pgg
