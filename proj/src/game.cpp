#include "pgg/game.hpp"

#include "pgg/errors.hpp"
#include "pgg/flow.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pgg {

void GameInstance::validate() const {
    if (k < 1) throw ValidationError("sharing capacity k must be >= 1");
    if (c <= 0 || c >= 1) throw ValidationError("price c must satisfy 0 < c < 1");
}

int GameInstance::capacity(Vertex v) const {
    return std::min(k, graph.out_degree(v));
}

void validate_pure_profile(const GameInstance& inst, const PureProfile& x) {
    const int n = inst.graph.vertex_count();
    if (static_cast<int>(x.size()) != n)
        throw ValidationError("profile length does not match vertex count");
    for (Vertex v = 0; v < n; ++v) {
        const auto& a = x[v];
        if (!a.buys) {
            if (!a.targets.empty())
                throw ValidationError("abstaining vertex " + std::to_string(v) +
                                      " has nominations");
            continue;
        }
        if (static_cast<int>(a.targets.size()) != inst.capacity(v))
            throw ValidationError("vertex " + std::to_string(v) + " nominates " +
                                  std::to_string(a.targets.size()) + " targets, needs " +
                                  std::to_string(inst.capacity(v)));
        std::set<Vertex> seen;
        for (Vertex t : a.targets) {
            if (!inst.graph.has_arc(v, t))
                throw ValidationError("vertex " + std::to_string(v) +
                                      " nominates non-out-neighbor " + std::to_string(t));
            if (!seen.insert(t).second)
                throw ValidationError("vertex " + std::to_string(v) +
                                      " nominates a target twice");
        }
    }
}

void validate_mixed_profile(const GameInstance& inst, const MixedProfile& sigma) {
    const int n = inst.graph.vertex_count();
    if (static_cast<int>(sigma.size()) != n)
        throw ValidationError("profile length does not match vertex count");
    for (Vertex v = 0; v < n; ++v) {
        const auto& a = sigma[v];
        if (a.buy_prob < 0.0 || a.buy_prob > 1.0)
            throw ValidationError("vertex " + std::to_string(v) + " has buy probability " +
                                  std::to_string(a.buy_prob));
        if (a.buy_prob == 0.0) continue;
        double total = 0.0;
        for (const auto& [targets, w] : a.nominations) {
            if (w < 0.0)
                throw ValidationError("vertex " + std::to_string(v) +
                                      " has a negative nomination weight");
            total += w;
            if (static_cast<int>(targets.size()) != inst.capacity(v))
                throw ValidationError("vertex " + std::to_string(v) +
                                      " has a support set of wrong size");
            std::set<Vertex> seen;
            for (Vertex t : targets) {
                if (!inst.graph.has_arc(v, t) || !seen.insert(t).second)
                    throw ValidationError("vertex " + std::to_string(v) +
                                          " has an invalid support set");
            }
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw ValidationError("vertex " + std::to_string(v) +
                                  ": nomination weights sum to " + std::to_string(total));
    }
}

CostReport pure_costs(const GameInstance& inst, const PureProfile& x) {
    validate_pure_profile(inst, x);
    const int n = inst.graph.vertex_count();
    std::vector<char> nominated(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (x[v].buys)
            for (Vertex t : x[v].targets) nominated[t] = 1;
    CostReport r;
    r.player_costs.resize(n);
    r.social_cost = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (x[v].buys)
            r.player_costs[v] = inst.c;
        else
            r.player_costs[v] = nominated[v] ? Rational(0) : Rational(1);
        r.social_cost += r.player_costs[v];
    }
    return r;
}

NashVerdict is_pure_nash_profile(const GameInstance& inst, const PureProfile& x) {
    validate_pure_profile(inst, x);
    const int n = inst.graph.vertex_count();
    std::vector<char> nominated(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (x[v].buys)
            for (Vertex t : x[v].targets) nominated[t] = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (x[v].buys && nominated[v])
            return {false, v, "buyer " + std::to_string(v) + " is nominated and gains by abstaining"};
        if (!x[v].buys && !nominated[v])
            return {false, v, "abstainer " + std::to_string(v) + " is uncovered and gains by buying"};
    }
    return {true, std::nullopt, ""};
}

namespace {

SetVerdict check_set(const GameInstance& inst, const std::vector<Vertex>& S,
                     bool require_independence) {
    inst.validate();
    const int n = inst.graph.vertex_count();
    std::vector<char> in_s(n, 0);
    for (Vertex v : S) {
        if (v < 0 || v >= n) throw ValidationError("set member out of range");
        in_s[v] = 1;
    }

    // Eligible nomination targets per buyer: outside S when independence is
    // required, anywhere otherwise.
    std::map<Vertex, int> caps;
    std::vector<Arc> cover_arcs;
    for (Vertex v : S) {
        int ki = inst.capacity(v);
        caps[v] = ki;
        int eligible = 0;
        for (Vertex t : inst.graph.out_neighbors(v)) {
            if (require_independence && in_s[t]) continue;
            ++eligible;
            if (!in_s[t]) cover_arcs.push_back({v, t});
        }
        if (eligible < ki)
            return {false, std::nullopt,
                    "buyer " + std::to_string(v) + " cannot place " + std::to_string(ki) +
                        " nominations" + (require_independence ? " outside the set" : "")};
    }
    std::vector<Vertex> targets;
    for (Vertex v = 0; v < n; ++v)
        if (!in_s[v]) targets.push_back(v);

    auto cover = max_flow_coverage(caps, cover_arcs, targets);
    if (!cover.covers_all)
        return {false, std::nullopt,
                "cover flow reaches only " + std::to_string(cover.flow_value) + " of " +
                    std::to_string(targets.size()) + " non-buyers"};

    // Witness: flow assignment, padded to exactly k_i targets, lowest ids first.
    Extension ext;
    for (Vertex v : S) ext[v] = {};
    for (const auto& [target, buyer] : cover.assignment) ext[buyer].push_back(target);
    for (Vertex v : S) {
        auto& nom = ext[v];
        std::set<Vertex> chosen(nom.begin(), nom.end());
        for (Vertex t : inst.graph.out_neighbors(v)) {
            if (static_cast<int>(nom.size()) >= inst.capacity(v)) break;
            if (chosen.count(t)) continue;
            if (require_independence && in_s[t]) continue;
            nom.push_back(t);
            chosen.insert(t);
        }
        std::sort(nom.begin(), nom.end());
    }
    return {true, std::move(ext), ""};
}

}  // namespace

SetVerdict is_pure_nash_set(const GameInstance& inst, const std::vector<Vertex>& S) {
    return check_set(inst, S, /*require_independence=*/true);
}

SetVerdict is_buyer_set(const GameInstance& inst, const std::vector<Vertex>& S) {
    return check_set(inst, S, /*require_independence=*/false);
}

MixedCostReport expected_costs(const GameInstance& inst, const MixedProfile& sigma) {
    validate_mixed_profile(inst, sigma);
    const int n = inst.graph.vertex_count();
    const double c = to_double(inst.c);
    MixedCostReport r;
    r.player_costs.resize(n);
    r.abstain_failure_prob.resize(n);
    for (Vertex i = 0; i < n; ++i) {
        double u = 1.0;  // probability that nobody covers i
        for (Vertex j : inst.graph.in_neighbors(i)) {
            double q = 0.0;  // P(j's nomination set contains i | j buys)
            for (const auto& [targets, w] : sigma[j].nominations)
                if (std::binary_search(targets.begin(), targets.end(), i)) q += w;
            u *= 1.0 - sigma[j].buy_prob * q;
        }
        r.abstain_failure_prob[i] = u;
        r.player_costs[i] = sigma[i].buy_prob * c + (1.0 - sigma[i].buy_prob) * u;
        r.social_cost += r.player_costs[i];
    }
    return r;
}

MixedNashVerdict is_mixed_nash(const GameInstance& inst, const MixedProfile& sigma, double tol) {
    if (tol <= 0) throw ValidationError("tolerance must be positive");
    auto costs = expected_costs(inst, sigma);
    const double c = to_double(inst.c);
    MixedNashVerdict v;
    for (Vertex i = 0; i < inst.graph.vertex_count(); ++i) {
        double u = costs.abstain_failure_prob[i];
        double p = sigma[i].buy_prob;
        // Buying must not be dominated when played, abstaining likewise.
        double regret = 0.0;
        if (p > tol) regret = std::max(regret, c - u);
        if (p < 1.0 - tol) regret = std::max(regret, u - c);
        if (regret > v.worst_regret) {
            v.worst_regret = regret;
            v.deviating_vertex = i;
        }
    }
    v.is_nash = v.worst_regret <= tol;
    if (v.is_nash) v.deviating_vertex.reset();
    return v;
}

std::vector<Vertex> buyers_of(const PureProfile& x) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < static_cast<int>(x.size()); ++v)
        if (x[v].buys) s.push_back(v);
    return s;
}

PureProfile profile_from_extension(const GameInstance& inst, const std::vector<Vertex>& S,
                                   const Extension& ext) {
    PureProfile x(inst.graph.vertex_count());
    for (Vertex v : S) {
        x[v].buys = true;
        auto it = ext.find(v);
        if (it != ext.end()) x[v].targets = it->second;
        std::sort(x[v].targets.begin(), x[v].targets.end());
    }
    return x;
}

MixedProfile degenerate_mixed(const GameInstance& inst, const PureProfile& x) {
    validate_pure_profile(inst, x);
    MixedProfile sigma(x.size());
    for (Vertex v = 0; v < static_cast<int>(x.size()); ++v) {
        if (x[v].buys) {
            sigma[v].buy_prob = 1.0;
            sigma[v].nominations = {{x[v].targets, 1.0}};
        }
    }
    return sigma;
}

}  // namespace pgg
