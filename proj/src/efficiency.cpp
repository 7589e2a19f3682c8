#include "pgg/efficiency.hpp"

#include "pgg/errors.hpp"
#include "pgg/families.hpp"
#include "pgg/matching.hpp"
#include "pgg/mixed_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pgg {

namespace {

template <typename F>
void for_each_combination(int n, int r, F&& visit) {
    if (r > n) return;
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!visit(idx)) return;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

int b1_via_matching(const GameInstance& inst) {
    if (inst.k != 1) throw ValidationError("b1_via_matching requires k = 1");
    return inst.graph.vertex_count() - maximum_matching(inst.graph).size();
}

MinBuyerResult min_buyer_set(const GameInstance& inst, int bound) {
    inst.validate();
    const int n = inst.graph.vertex_count();

    if (inst.k == 1) {
        // Heads of a maximum matching are the covered non-buyers.
        auto m = maximum_matching(inst.graph);
        std::vector<char> is_head(n, 0);
        for (auto [u, v] : m.edges) {
            // orient the matching edge along an arc of D; head gets covered
            Vertex head = inst.graph.has_arc(u, v) ? v : u;
            is_head[head] = 1;
        }
        MinBuyerResult res;
        for (Vertex v = 0; v < n; ++v)
            if (!is_head[v]) res.witness.push_back(v);
        res.size = static_cast<int>(res.witness.size());
        auto verdict = is_buyer_set(inst, res.witness);
        if (!verdict.holds || res.size != n - m.size())
            throw std::logic_error("matching-based buyer set failed verification");
        return res;
    }

    if (n > bound)
        throw BoundExceeded("min_buyer_set: n = " + std::to_string(n) + " exceeds bound for k >= 2");

    // Vertices without in-neighbors can never be covered.
    std::vector<Vertex> forced, optional_v;
    for (Vertex v = 0; v < n; ++v)
        (inst.graph.in_degree(v) == 0 ? forced : optional_v).push_back(v);

    int lower = std::max((n + inst.k) / (inst.k + 1), static_cast<int>(forced.size()));
    for (int size = lower; size <= n; ++size) {
        int extra = size - static_cast<int>(forced.size());
        if (extra < 0 || extra > static_cast<int>(optional_v.size())) continue;
        std::optional<MinBuyerResult> hit;
        for_each_combination(static_cast<int>(optional_v.size()), extra,
                             [&](const std::vector<int>& idx) {
                                 std::vector<Vertex> S = forced;
                                 for (int i : idx) S.push_back(optional_v[i]);
                                 std::sort(S.begin(), S.end());
                                 if (is_buyer_set(inst, S).holds) {
                                     hit = MinBuyerResult{size, std::move(S)};
                                     return false;
                                 }
                                 return true;
                             });
        if (hit) return *hit;
    }
    throw std::logic_error("no buyer set found; V itself should always qualify");
}

EquilibriumRange pure_equilibrium_range(const GameInstance& inst, int bound) {
    auto rep = brute_force_pure_nash(inst, OracleMode::all, bound);
    EquilibriumRange range;
    range.exists = rep.exists;
    if (!rep.exists) return range;
    range.pn = rep.min_size;
    range.Pn = rep.max_size;
    for (const auto& S : *rep.all_sets) {
        if (static_cast<int>(S.size()) == *rep.min_size && !range.pn_witness) range.pn_witness = S;
        if (static_cast<int>(S.size()) == *rep.max_size && !range.Pn_witness) range.Pn_witness = S;
    }
    return range;
}

SocialOptimum social_optimum(const GameInstance& inst, int bound) {
    auto b = min_buyer_set(inst, bound);
    return {inst.c * b.size, std::move(b.witness)};
}

EfficiencyReport ratios_and_bounds(const GameInstance& inst, int bound) {
    inst.validate();
    const int n = inst.graph.vertex_count();
    auto range = pure_equilibrium_range(inst, bound);
    auto b = min_buyer_set(inst, bound);

    EfficiencyReport rep;
    rep.equilibria_exist = range.exists;
    rep.pn = range.pn;
    rep.Pn = range.Pn;
    rep.pn_witness = range.pn_witness;
    rep.Pn_witness = range.Pn_witness;
    rep.b = b.size;
    rep.b_witness = b.witness;
    rep.social_optimum = inst.c * b.size;

    int k = inst.k;
    rep.b_lower_bound_ok = b.size >= (n + k) / (k + 1);
    if (range.exists) {
        rep.pos_ratio = Rational(*range.pn, b.size);
        rep.poa_ratio = Rational(*range.Pn, b.size);
        Rational pos_cap = Rational(k) + Rational(1, k + 1);
        rep.pos_bound_ok = *rep.pos_ratio <= pos_cap;
        rep.poa_bound_ok = *rep.poa_ratio <= Rational(k + 1);
    }
    if (!rep.b_lower_bound_ok || !rep.pos_bound_ok || !rep.poa_bound_ok)
        throw std::logic_error("proved efficiency bound violated; implementation bug");
    return rep;
}

DkrMixedReport dkr_mixed_report(int k, int r, const Rational& c, int bound) {
    auto labeled = gen_dkr(k, r);
    labeled.instance.c = c;
    labeled.instance.k = k;
    const GameInstance& inst = labeled.instance;

    DkrMixedReport rep;
    rep.k = k;
    rep.r = r;
    rep.n = inst.graph.vertex_count();
    rep.c = c;

    double p = 1.0 - std::pow(to_double(c), 1.0 / k);
    auto sigma = uniform_profile(inst, p);
    rep.uniform_profile_is_nash = is_mixed_nash(inst, sigma, 1e-9).is_nash;
    auto costs = expected_costs(inst, sigma);
    const double cd = to_double(c);
    for (double cost : costs.player_costs)
        rep.max_cost_deviation = std::max(rep.max_cost_deviation, std::abs(cost - cd));

    rep.mpn = c * rep.n;  // every vertex pays c in this equilibrium
    rep.mb_upper = c * (2 * r + 2);
    rep.mb_lower = c * rep.n / (k + 1);
    rep.ratio_lower_bound = Rational(k + 1) * (Rational(1) - Rational(1, 2 * r + 2));
    auto b = min_buyer_set(inst, bound);
    rep.mb_exact = c * b.size;
    rep.ratio = rep.mpn / rep.mb_exact;
    return rep;
}

int min_buyer_set_out_tree(const GameInstance& inst) {
    const Digraph& g = inst.graph;
    const int n = g.vertex_count();
    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0) {
            if (root != -1) throw ValidationError("not an out-tree: two roots");
            root = v;
        } else if (g.in_degree(v) != 1) {
            throw ValidationError("not an out-tree: vertex with in-degree > 1");
        }
    }
    if (root == -1) throw ValidationError("not an out-tree: no root");

    // f(v, covered) = min buyers in v's subtree; a buyer covers its
    // min(k, #children) cheapest-to-cover children.
    std::function<std::pair<int, int>(Vertex)> dp = [&](Vertex v) -> std::pair<int, int> {
        const auto& children = g.out_neighbors(v);
        if (children.empty()) return {0, 1};  // {covered, uncovered}
        int sum_uncov = 0;
        std::vector<int> savings;  // f(c, covered) - f(c, uncovered), <= 0
        for (Vertex cvert : children) {
            auto [fc, fu] = dp(cvert);
            sum_uncov += fu;
            savings.push_back(fc - fu);
        }
        std::sort(savings.begin(), savings.end());
        int kv = std::min<int>(inst.k, static_cast<int>(children.size()));
        int buy = 1 + sum_uncov;
        for (int i = 0; i < kv; ++i) buy += savings[i];
        int abstain = sum_uncov;
        return {std::min(buy, abstain), buy};
    };
    return dp(root).second;
}

PosProbeResult probe_pos_out_trees(int k, int r_max, const Rational& c) {
    PosProbeResult res;
    res.max_ratio = 0;
    for (int r = 2; r <= r_max; ++r) {
        auto labeled = gen_out_tree(k, r);
        labeled.instance.c = c;
        const GameInstance& inst = labeled.instance;

        // Odd levels buy (each nominating its whole child set); the verifier
        // confirms this is an equilibrium buyer set.
        std::vector<Vertex> S;
        int level_start = 0, level_size = 1;
        for (int level = 1; level <= r; ++level) {
            if (level % 2 == 1)
                for (int i = 0; i < level_size; ++i) S.push_back(level_start + i);
            level_start += level_size;
            level_size *= k;
        }
        if (!is_pure_nash_set(inst, S).holds)
            throw std::logic_error("odd-level set failed equilibrium verification");

        int b = min_buyer_set_out_tree(inst);
        PosProbeEntry e;
        e.label = "T_" + std::to_string(k) + "," + std::to_string(r);
        e.n = inst.graph.vertex_count();
        e.pn = static_cast<int>(S.size());
        e.b = b;
        e.ratio = Rational(e.pn, e.b);
        res.max_ratio = std::max(res.max_ratio, e.ratio);
        res.entries.push_back(std::move(e));
    }
    return res;
}

PosProbeResult probe_pos_random(int count, int n, double arc_prob, unsigned seed,
                                const Rational& c) {
    PosProbeResult res;
    res.max_ratio = 0;
    int found = 0;
    for (unsigned attempt = 0; found < count && attempt < 50u * count; ++attempt) {
        auto labeled = gen_random(n, arc_prob, seed + attempt);
        labeled.instance.c = c;
        const GameInstance& inst = labeled.instance;
        auto range = pure_equilibrium_range(inst);
        if (!range.exists) continue;
        auto b = min_buyer_set(inst);
        PosProbeEntry e;
        e.label = "random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed + attempt) + ")";
        e.n = n;
        e.pn = *range.pn;
        e.b = b.size;
        e.ratio = Rational(e.pn, e.b);
        res.max_ratio = std::max(res.max_ratio, e.ratio);
        res.entries.push_back(std::move(e));
        ++found;
    }
    return res;
}

}  // namespace pgg
