#include "pgg/families.hpp"

#include "pgg/errors.hpp"

#include <algorithm>
#include <random>

namespace pgg {

void Hypergraph3::validate(bool forbid_isolated) const {
    if (n < 0) throw ValidationError("negative hypergraph vertex count");
    std::vector<char> touched(n, 0);
    for (const auto& e : edges) {
        if (e[0] < 0 || e[2] >= n || e[0] >= e[1] || e[1] >= e[2])
            throw ValidationError("hyperedge is not a sorted triple of distinct vertices in range");
        for (Vertex v : e) touched[v] = 1;
    }
    if (forbid_isolated)
        for (Vertex v = 0; v < n; ++v)
            if (!touched[v])
                throw ValidationError("isolated hypergraph vertex " + std::to_string(v));
}

LabeledInstance gen_cycle(int n) {
    if (n < 2) throw ValidationError("gen_cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    LabeledInstance li;
    li.instance.graph = Digraph(n, std::move(arcs));
    li.family = "cycle";
    li.parameters = "n=" + std::to_string(n);
    for (Vertex i = 0; i < n; ++i) li.names.push_back("v" + std::to_string(i));
    return li;
}

LabeledInstance gen_complete(int n) {
    if (n < 1) throw ValidationError("gen_complete needs n >= 1");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j) arcs.push_back({i, j});
    LabeledInstance li;
    li.instance.graph = Digraph(n, std::move(arcs));
    li.family = "complete";
    li.parameters = "n=" + std::to_string(n);
    for (Vertex i = 0; i < n; ++i) li.names.push_back("v" + std::to_string(i));
    return li;
}

LabeledInstance gen_random(int n, double arc_prob, unsigned seed) {
    if (n < 1 || arc_prob < 0.0 || arc_prob > 1.0)
        throw ValidationError("gen_random: need n >= 1 and arc_prob in [0,1]");
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j && coin(rng) < arc_prob) arcs.push_back({i, j});
    LabeledInstance li;
    li.instance.graph = Digraph(n, std::move(arcs));
    li.family = "random";
    li.parameters = "n=" + std::to_string(n) + ",p=" + std::to_string(arc_prob) +
                    ",seed=" + std::to_string(seed);
    for (Vertex i = 0; i < n; ++i) li.names.push_back("v" + std::to_string(i));
    return li;
}

LabeledInstance gen_out_tree(int k, int r) {
    if (k < 1 || r < 1) throw ValidationError("gen_out_tree needs k >= 1, r >= 1");
    LabeledInstance li;
    std::vector<Arc> arcs;
    int level_start = 0, level_size = 1;
    for (int level = 1; level <= r; ++level) {
        for (int i = 0; i < level_size; ++i) {
            Vertex v = level_start + i;
            li.names.push_back("x_" + std::to_string(level) + "^" + std::to_string(i + 1));
            if (level < r)
                for (int child = 0; child < k; ++child)
                    arcs.push_back({v, level_start + level_size + i * k + child});
        }
        level_start += level_size;
        level_size *= k;
    }
    li.instance.graph = Digraph(level_start, std::move(arcs));
    li.instance.k = k;
    li.family = "out-tree";
    li.parameters = "k=" + std::to_string(k) + ",r=" + std::to_string(r);
    return li;
}

LabeledInstance gen_dkr(int k, int r) {
    if (k < 1 || r < 1) throw ValidationError("gen_dkr needs k >= 1, r >= 1");
    const int blocks = 2 * r + 1;
    const int block_size = k + 1;
    const int n = blocks * block_size;
    auto id = [&](int block, int pos) { return block * block_size + pos; };

    std::vector<Arc> arcs;
    for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < block_size; ++i)
            for (int j = 0; j < block_size; ++j)
                arcs.push_back({id(b, i), id((b + 1) % blocks, j)});

    // The fixed Hamilton cycle c_1 ... c_n walks the blocks round-robin:
    // c_t sits in block (t-1) mod (2r+1) at position floor((t-1)/(2r+1)).
    auto ham = [&](int t) {  // t in 0..n-1
        return id(t % blocks, t / blocks);
    };
    std::vector<Arc> ham_arcs;
    for (int t = 0; t < n; ++t) ham_arcs.push_back({ham(t), ham((t + 1) % n)});
    std::sort(ham_arcs.begin(), ham_arcs.end());
    std::vector<Arc> kept;
    for (const Arc& a : arcs)
        if (!std::binary_search(ham_arcs.begin(), ham_arcs.end(), a)) kept.push_back(a);

    LabeledInstance li;
    li.instance.graph = Digraph(n, std::move(kept));
    li.instance.k = k;
    li.family = "dkr";
    li.parameters = "k=" + std::to_string(k) + ",r=" + std::to_string(r);
    for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < block_size; ++i)
            li.names.push_back("X" + std::to_string(b + 1) + "_" + std::to_string(i + 1));
    return li;
}

LabeledInstance gadget_galaxy(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<Arc> arcs = d.arcs();
    LabeledInstance li;
    for (Vertex v = 0; v < n; ++v) li.names.push_back("v" + std::to_string(v));
    int next = n;
    for (Vertex x = 0; x < n; ++x) {
        if (d.out_degree(x) > 0) continue;
        Vertex u = next++, w = next++;
        li.names.push_back("u_v" + std::to_string(x));
        li.names.push_back("w_v" + std::to_string(x));
        arcs.push_back({x, u});
        arcs.push_back({u, w});
        arcs.push_back({w, x});
    }
    li.instance.graph = Digraph(next, std::move(arcs));
    li.instance.k = 1;
    li.family = "gadget-galaxy";
    li.parameters = "n=" + std::to_string(n);
    return li;
}

LabeledInstance gadget_transversal(const Hypergraph3& h, int r, int k) {
    h.validate(/*forbid_isolated=*/true);
    if (k < 2) throw ValidationError("gadget_transversal needs k >= 2");
    if (r < 0 || r > h.n) throw ValidationError("gadget_transversal needs 0 <= r <= |V(h)|");

    const int m = static_cast<int>(h.edges.size());
    const int z_count = (k - 1) * m;
    const int x_count = k * (h.n - r);

    LabeledInstance li;
    std::vector<Arc> arcs;
    int next = 0;
    std::vector<Vertex> e_ids(m), v_ids(h.n), z_ids(z_count), x_ids(x_count);
    for (int i = 0; i < m; ++i) {
        e_ids[i] = next++;
        li.names.push_back("e" + std::to_string(i + 1));
    }
    for (int i = 0; i < h.n; ++i) {
        v_ids[i] = next++;
        li.names.push_back("v" + std::to_string(i + 1));
    }
    for (int i = 0; i < z_count; ++i) {
        z_ids[i] = next++;
        li.names.push_back("z" + std::to_string(i + 1));
    }
    for (int i = 0; i < x_count; ++i) {
        x_ids[i] = next++;
        li.names.push_back("x" + std::to_string(i + 1));
    }

    // e_i -> its three hypergraph vertices, plus its k-1 private Z sinks
    // (edge i owns z_{i(k-1)} .. z_{(i+1)(k-1)-1}, so every z has in-degree 1).
    for (int i = 0; i < m; ++i) {
        for (Vertex hv : h.edges[i]) arcs.push_back({e_ids[i], v_ids[hv]});
        for (int j = 0; j < k - 1; ++j) arcs.push_back({e_ids[i], z_ids[i * (k - 1) + j]});
    }
    for (Vertex v : v_ids)
        for (Vertex x : x_ids) arcs.push_back({v, x});

    // The widget on each q in Z u X: q -> u_q -> w_q -> q, q -> s_q -> t_q,
    // and t_q -> every edge vertex (this is what makes the digraph strong).
    std::vector<Vertex> widget_hosts = z_ids;
    widget_hosts.insert(widget_hosts.end(), x_ids.begin(), x_ids.end());
    for (Vertex q : widget_hosts) {
        Vertex u = next++, w = next++, s = next++, t = next++;
        const std::string qn = li.names[q];
        li.names.push_back("u_" + qn);
        li.names.push_back("w_" + qn);
        li.names.push_back("s_" + qn);
        li.names.push_back("t_" + qn);
        arcs.push_back({q, u});
        arcs.push_back({u, w});
        arcs.push_back({w, q});
        arcs.push_back({q, s});
        arcs.push_back({s, t});
        for (Vertex e : e_ids) arcs.push_back({t, e});
    }

    li.instance.graph = Digraph(next, std::move(arcs));
    li.instance.k = k;
    li.family = "gadget-transversal";
    li.parameters = "k=" + std::to_string(k) + ",r=" + std::to_string(r) +
                    ",|V|=" + std::to_string(h.n) + ",|E|=" + std::to_string(m);
    return li;
}

TransversalResult transversal_brute_force(const Hypergraph3& h, int r) {
    h.validate();
    if (h.n > 20) throw BoundExceeded("transversal_brute_force bound is |V| <= 20");
    TransversalResult best;
    for (std::uint32_t mask = 0; mask < (1u << h.n); ++mask) {
        if (static_cast<int>(std::popcount(mask)) > r) continue;
        bool hits_all = true;
        for (const auto& e : h.edges)
            if (!((mask >> e[0]) & 1) && !((mask >> e[1]) & 1) && !((mask >> e[2]) & 1)) {
                hits_all = false;
                break;
            }
        if (!hits_all) continue;
        std::vector<Vertex> w;
        for (Vertex v = 0; v < h.n; ++v)
            if ((mask >> v) & 1) w.push_back(v);
        if (!best.exists || w.size() < best.witness.size()) best = {true, std::move(w)};
    }
    return best;
}

}  // namespace pgg
