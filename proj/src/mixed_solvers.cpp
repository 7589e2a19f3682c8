#include "pgg/mixed_solvers.hpp"

#include "pgg/errors.hpp"

#include <queue>
#include <vector>

namespace pgg {

DesignationMap designate_lowest_out_neighbors(const Digraph& g) {
    DesignationMap d;
    d.designated.assign(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) > 0) d.designated[v] = g.out_neighbors(v)[0];
    return d;
}

MixedProfile solve_mixed_k1(const GameInstance& inst) {
    inst.validate();
    if (inst.k != 1) throw ValidationError("solve_mixed_k1 requires k = 1");
    const Digraph& g = inst.graph;
    const int n = g.vertex_count();
    auto designation = designate_lowest_out_neighbors(g);
    const auto& target = designation.designated;

    // In-degree within the designated subgraph D'.
    std::vector<int> din(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (target[v] != -1) ++din[target[v]];

    std::vector<char> present(n, 1), decided(n, 0);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> sources;
    for (Vertex v = 0; v < n; ++v)
        if (din[v] == 0) sources.push(v);

    MixedProfile sigma(n);
    auto erase = [&](Vertex v) {
        present[v] = 0;
        if (target[v] != -1 && present[target[v]]) {
            if (--din[target[v]] == 0 && !decided[target[v]]) sources.push(target[v]);
        }
    };

    while (!sources.empty()) {
        Vertex s = sources.top();
        sources.pop();
        if (!present[s] || decided[s]) continue;
        decided[s] = 1;
        sigma[s].buy_prob = 1.0;
        // Sources buy even when their designated target is already covered;
        // sinks buy with the empty nomination set.
        if (target[s] != -1)
            sigma[s].nominations = {{{target[s]}, 1.0}};
        else
            sigma[s].nominations = {{{}, 1.0}};
        Vertex t = target[s];
        erase(s);
        if (t != -1 && present[t]) {
            decided[t] = 1;
            sigma[t].buy_prob = 0.0;
            erase(t);
        }
    }

    // Residual of D' is a disjoint union of directed cycles.
    const double p = 1.0 - to_double(inst.c);
    for (Vertex v = 0; v < n; ++v) {
        if (!present[v]) continue;
        sigma[v].buy_prob = p;
        sigma[v].nominations = {{{target[v]}, 1.0}};
    }
    return sigma;
}

MixedProfile uniform_profile(const GameInstance& inst, double p) {
    inst.validate();
    if (p < 0.0 || p > 1.0) throw ValidationError("probability out of range");
    const Digraph& g = inst.graph;
    MixedProfile sigma(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) > inst.k)
            throw ValidationError("uniform_profile: vertex " + std::to_string(v) +
                                  " has out-degree above k");
        sigma[v].buy_prob = p;
        if (p > 0.0) sigma[v].nominations = {{g.out_neighbors(v), 1.0}};
    }
    return sigma;
}

}  // namespace pgg
