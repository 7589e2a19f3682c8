#include "pgg/pure_solvers.hpp"

#include "pgg/cycles.hpp"
#include "pgg/errors.hpp"
#include "pgg/matching.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pgg {

std::vector<Vertex> RGalaxy::leaves() const {
    std::vector<Vertex> out;
    for (const auto& s : stars) out.insert(out.end(), s.leaves.begin(), s.leaves.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> RGalaxy::roots() const {
    std::vector<Vertex> out;
    for (const auto& s : stars) out.push_back(s.root);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::oracle: return "oracle";
        case SolveMethod::strong_k1: return "strong-k1";
        case SolveMethod::acyclic: return "acyclic";
        case SolveMethod::delta1: return "delta1";
        case SolveMethod::terminal_even: return "terminal-even";
        case SolveMethod::bipartite: return "bipartite";
        case SolveMethod::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Visits all size-r subsets of 0..n-1 in lexicographic order; stop when the
// visitor returns false.
template <typename F>
void for_each_combination(int n, int r, F&& visit) {
    std::vector<Vertex> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r > n) return;
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

PureSolveReport brute_force_pure_nash(const GameInstance& inst, OracleMode mode, int bound) {
    inst.validate();
    const int n = inst.graph.vertex_count();
    if (n > bound)
        throw BoundExceeded("oracle bound " + std::to_string(bound) + " exceeded (n = " +
                            std::to_string(n) + ")");

    PureSolveReport rep;
    rep.method = SolveMethod::oracle;
    if (mode == OracleMode::all) rep.all_sets.emplace();

    auto consider = [&](const std::vector<Vertex>& S) -> bool /* continue? */ {
        ++rep.sets_examined;
        auto verdict = is_pure_nash_set(inst, S);
        if (!verdict.holds) return true;
        if (!rep.exists || mode == OracleMode::max) {
            rep.exists = true;
            rep.witness = BuyerSet{S, std::move(verdict.witness_extension)};
        }
        if (mode == OracleMode::all) rep.all_sets->push_back(S);
        if (!rep.min_size) rep.min_size = static_cast<int>(S.size());
        rep.min_size = std::min(*rep.min_size, static_cast<int>(S.size()));
        if (!rep.max_size) rep.max_size = static_cast<int>(S.size());
        rep.max_size = std::max(*rep.max_size, static_cast<int>(S.size()));
        // min/max/any stop at the first hit of the extremal sweep direction
        return mode == OracleMode::all;
    };

    if (mode == OracleMode::max) {
        for (int size = n; size >= 0; --size) {
            bool keep_going = true;
            for_each_combination(n, size, [&](const std::vector<Vertex>& S) {
                return keep_going = consider(S);
            });
            if (!keep_going) break;
        }
    } else {
        for (int size = 0; size <= n; ++size) {
            bool keep_going = true;
            for_each_combination(n, size, [&](const std::vector<Vertex>& S) {
                return keep_going = consider(S);
            });
            if (!keep_going) break;
        }
    }
    return rep;
}

namespace {

// Backtracking state for search_pure_nash. Propagation rules:
//  * a vertex all of whose in-neighbors are non-buyers must buy;
//  * a buyer with exactly k_i non-buying out-neighbor candidates pins all of
//    them as non-buyers, and fewer than k_i is a contradiction.
// Leaves are verified with the exact cover flow.
struct SearchState {
    enum Status : char { kUndecided = 0, kIn = 1, kOut = 2 };
    std::vector<char> status;
    std::vector<int> in_not_out;    // per vertex: in-neighbors with status != OUT
    std::vector<int> out_not_in;    // per vertex: out-neighbors with status != IN
    std::vector<Vertex> pending;    // vertices whose forced assignment is queued
};

class PureNashSearch {
public:
    explicit PureNashSearch(const GameInstance& inst) : inst_(inst), n_(inst.graph.vertex_count()) {}

    std::optional<BuyerSet> run() {
        SearchState s;
        s.status.assign(n_, SearchState::kUndecided);
        s.in_not_out.resize(n_);
        s.out_not_in.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            s.in_not_out[v] = inst_.graph.in_degree(v);
            s.out_not_in[v] = inst_.graph.out_degree(v);
        }
        // vertices nobody can cover must buy
        for (Vertex v = 0; v < n_; ++v)
            if (s.in_not_out[v] == 0) s.pending.push_back(v);
        std::vector<char> forced_in(n_, 0);
        for (Vertex v : s.pending) forced_in[v] = 1;
        if (!assign_pending(s, forced_in)) return std::nullopt;
        return solve(s);
    }

private:
    const GameInstance& inst_;
    int n_;

    bool set_in(SearchState& s, Vertex v) {
        if (s.status[v] == SearchState::kIn) return true;
        if (s.status[v] == SearchState::kOut) return false;
        s.status[v] = SearchState::kIn;
        if (s.out_not_in[v] < inst_.capacity(v)) return false;
        if (s.out_not_in[v] == inst_.capacity(v))
            for (Vertex t : inst_.graph.out_neighbors(v))
                if (s.status[t] == SearchState::kUndecided && !set_out(s, t)) return false;
        for (Vertex p : inst_.graph.in_neighbors(v)) {
            if (--s.out_not_in[p] < 0) return false;  // unreachable; counter sanity
            if (s.status[p] == SearchState::kIn) {
                if (s.out_not_in[p] < inst_.capacity(p)) return false;
                if (s.out_not_in[p] == inst_.capacity(p))
                    for (Vertex t : inst_.graph.out_neighbors(p))
                        if (s.status[t] == SearchState::kUndecided && !set_out(s, t)) return false;
            }
        }
        return true;
    }

    bool set_out(SearchState& s, Vertex v) {
        if (s.status[v] == SearchState::kOut) return true;
        if (s.status[v] == SearchState::kIn) return false;
        s.status[v] = SearchState::kOut;
        if (s.in_not_out[v] == 0) return false;  // nobody left to cover v
        for (Vertex t : inst_.graph.out_neighbors(v)) {
            --s.in_not_out[t];
            if (s.in_not_out[t] == 0) {
                if (s.status[t] == SearchState::kOut) return false;
                if (s.status[t] == SearchState::kUndecided && !set_in(s, t)) return false;
            }
        }
        return true;
    }

    bool assign_pending(SearchState& s, const std::vector<char>& forced_in) {
        for (Vertex v = 0; v < n_; ++v)
            if (forced_in[v] && s.status[v] == SearchState::kUndecided && !set_in(s, v))
                return false;
        return true;
    }

    std::optional<BuyerSet> solve(SearchState s) {
        Vertex branch = -1;
        for (Vertex v = 0; v < n_; ++v)
            if (s.status[v] == SearchState::kUndecided) {
                branch = v;
                break;
            }
        if (branch == -1) {
            std::vector<Vertex> S;
            for (Vertex v = 0; v < n_; ++v)
                if (s.status[v] == SearchState::kIn) S.push_back(v);
            auto verdict = is_pure_nash_set(inst_, S);
            if (!verdict.holds) return std::nullopt;
            return BuyerSet{std::move(S), std::move(verdict.witness_extension)};
        }
        {
            SearchState in_branch = s;
            if (set_in(in_branch, branch))
                if (auto hit = solve(std::move(in_branch))) return hit;
        }
        if (!set_out(s, branch)) return std::nullopt;
        return solve(std::move(s));
    }
};

}  // namespace

std::optional<BuyerSet> search_pure_nash(const GameInstance& inst) {
    inst.validate();
    return PureNashSearch(inst).run();
}

BuyerSet leaves_to_nash(const Digraph& g, const RGalaxy& galaxy) {
    std::vector<char> seen(g.vertex_count(), 0);
    Extension ext;
    for (const auto& star : galaxy.stars) {
        if (star.leaves.empty()) throw ValidationError("star without leaves");
        auto mark = [&](Vertex v) {
            if (v < 0 || v >= g.vertex_count() || seen[v])
                throw ValidationError("stars are not vertex-disjoint or out of range");
            seen[v] = 1;
        };
        mark(star.root);
        for (Vertex leaf : star.leaves) {
            mark(leaf);
            if (!g.has_arc(leaf, star.root))
                throw ValidationError("missing arc " + std::to_string(leaf) + "->" +
                                      std::to_string(star.root));
            ext[leaf] = {star.root};
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError("r-galaxy is not spanning");
    BuyerSet S;
    S.members = galaxy.leaves();
    S.witness_extension = std::move(ext);
    return S;
}

RGalaxy nash_to_galaxy(const Digraph& g, const std::vector<Vertex>& S) {
    if (g.min_out_degree() == 0)
        throw ValidationError("nash_to_galaxy requires minimum out-degree >= 1");
    GameInstance inst{g, 1, Rational(1, 2)};
    auto verdict = is_pure_nash_set(inst, S);
    if (!verdict.holds)
        throw ValidationError("input is not a 1-pure-Nash set: " + verdict.reason);
    std::map<Vertex, std::vector<Vertex>> by_root;
    for (const auto& [buyer, targets] : *verdict.witness_extension) {
        // k = 1 and delta^+ >= 1: exactly one nomination per buyer
        by_root[targets.at(0)].push_back(buyer);
    }
    RGalaxy galaxy;
    for (auto& [root, leaves] : by_root) {
        std::sort(leaves.begin(), leaves.end());
        galaxy.stars.push_back({root, std::move(leaves)});
    }
    galaxy.spanning = true;
    return galaxy;
}

EvenStrongVerdict decide_even_strong_subdigraph(const Digraph& g, int bound) {
    const int n = g.vertex_count();
    if (n < 2 || !is_strong(g))
        throw ValidationError("decide_even_strong_subdigraph expects a strong digraph, n >= 2");
    if (n % 2 == 0) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        return {true, std::move(all), "even-order"};
    }
    bool cycle_search_complete = true;
    try {
        if (auto cycle = find_even_directed_cycle(g)) {
            auto w = *cycle;
            std::sort(w.begin(), w.end());
            return {true, std::move(w), "even-cycle"};
        }
    } catch (const BoundExceeded&) {
        cycle_search_complete = false;
    }
    if (!has_perfect_matching_minus_each_vertex(g)) return {true, {}, "matching-deficiency"};
    // Exhaustive even-subset fallback (also the oracle the fast paths are
    // tested against).
    if (n > bound) {
        if (!cycle_search_complete)
            throw BoundExceeded("even-strong decision: fast paths inconclusive and n > bound");
        // fast paths were conclusive: no even cycle and all deletions match
        // perfectly; still fall through to be safe only within bound
        throw BoundExceeded("even-strong decision needs the subset fallback but n > bound");
    }
    for (int size = 2; size <= n; size += 2) {
        std::optional<std::vector<Vertex>> hit;
        for_each_combination(n, size, [&](const std::vector<Vertex>& W) {
            std::vector<char> keep(n, 0);
            for (Vertex v : W) keep[v] = 1;
            if (is_strong(g.induced(keep))) {
                hit = W;
                return false;
            }
            return true;
        });
        if (hit) return {true, std::move(*hit), "subset-enumeration"};
    }
    return {false, {}, "subset-enumeration"};
}

PureSolveReport solve_strong_k1(const GameInstance& inst, int bound) {
    inst.validate();
    if (inst.k != 1) throw ValidationError("solve_strong_k1 requires k = 1");
    auto verdict = decide_even_strong_subdigraph(inst.graph, bound);
    PureSolveReport rep;
    rep.method = SolveMethod::strong_k1;
    rep.exists = verdict.exists;
    if (verdict.exists) {
        auto oracle = brute_force_pure_nash(inst, OracleMode::any, bound);
        rep.witness = oracle.witness;
        rep.sets_examined = oracle.sets_examined;
    }
    return rep;
}

namespace {

struct RemovalEvent {
    enum Kind { kIsolated, kPair, kCycle } kind;
    Vertex x = -1, y = -1;
    std::vector<Vertex> cycle;
};

// Shared peel-and-patch machinery behind the acyclic and delta1 builders.
// Events are replayed innermost-first to rebuild (S, extension).
BuyerSet replay(const Digraph& g, const std::vector<RemovalEvent>& events) {
    std::vector<Vertex> S;
    Extension ext;
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
        switch (it->kind) {
            case RemovalEvent::kIsolated:
                S.push_back(it->x);
                ext[it->x] = {};
                break;
            case RemovalEvent::kPair: {
                for (Vertex s : S)
                    if (ext[s].empty() && g.has_arc(s, it->y)) ext[s] = {it->y};
                S.push_back(it->x);
                ext[it->x] = {it->y};
                break;
            }
            case RemovalEvent::kCycle: {
                const auto& cyc = it->cycle;
                for (size_t i = 0; i < cyc.size(); i += 2) {
                    S.push_back(cyc[i]);
                    ext[cyc[i]] = {cyc[(i + 1) % cyc.size()]};
                }
                break;
            }
        }
    }
    std::sort(S.begin(), S.end());
    return {std::move(S), std::move(ext)};
}

// Peels in-degree-0 vertices (with their lowest-id out-neighbor) until the
// graph is empty or cycle_handler takes over the residual.
template <typename CycleHandler>
std::vector<RemovalEvent> peel(const Digraph& g, CycleHandler&& on_residual) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> live_in(n), live_out(n);
    for (Vertex v = 0; v < n; ++v) {
        live_in[v] = g.in_degree(v);
        live_out[v] = g.out_degree(v);
    }
    auto remove_vertex = [&](Vertex v) {
        alive[v] = 0;
        for (Vertex t : g.out_neighbors(v))
            if (alive[t]) --live_in[t];
        for (Vertex p : g.in_neighbors(v))
            if (alive[p]) --live_out[p];
    };
    std::vector<RemovalEvent> events;
    int remaining = n;
    while (remaining > 0) {
        Vertex x = -1;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && live_in[v] == 0) {
                x = v;
                break;
            }
        if (x == -1) {
            on_residual(alive, events);
            break;
        }
        if (live_out[x] == 0) {
            events.push_back({RemovalEvent::kIsolated, x, -1, {}});
            remove_vertex(x);
            --remaining;
        } else {
            Vertex y = -1;
            for (Vertex t : g.out_neighbors(x))
                if (alive[t]) {
                    y = t;
                    break;
                }
            events.push_back({RemovalEvent::kPair, x, y, {}});
            remove_vertex(x);
            remove_vertex(y);
            remaining -= 2;
        }
    }
    return events;
}

}  // namespace

PureSolveReport solve_acyclic(const GameInstance& inst) {
    inst.validate();
    if (inst.k != 1) throw ValidationError("solve_acyclic: constructive induction needs k = 1");
    if (!is_acyclic(inst.graph)) throw ValidationError("solve_acyclic: input has a directed cycle");
    auto events = peel(inst.graph, [](const std::vector<char>&, std::vector<RemovalEvent>&) {
        throw ValidationError("acyclic peel found a residual cycle");  // unreachable
    });
    PureSolveReport rep;
    rep.method = SolveMethod::acyclic;
    rep.exists = true;
    rep.witness = replay(inst.graph, events);
    return rep;
}

bool delta1_no_odd_applies(const Digraph& g) {
    if (g.max_out_degree() > 1) return false;
    for (const auto& comp : strongly_connected_components(g).components)
        if (comp.size() > 1 && comp.size() % 2 == 1) return false;
    return true;
}

PureSolveReport solve_delta1_no_odd(const GameInstance& inst) {
    inst.validate();
    if (inst.k != 1) throw ValidationError("solve_delta1_no_odd: needs k = 1");
    if (inst.graph.max_out_degree() > 1)
        throw ValidationError("solve_delta1_no_odd: maximum out-degree exceeds 1");
    for (const auto& comp : strongly_connected_components(inst.graph).components)
        if (comp.size() > 1 && comp.size() % 2 == 1)
            throw ValidationError("solve_delta1_no_odd: odd cycle through vertex " +
                                  std::to_string(comp[0]));

    const Digraph& g = inst.graph;
    auto events = peel(g, [&](const std::vector<char>& alive, std::vector<RemovalEvent>& events) {
        // Residual has min in-degree >= 1 and max out-degree <= 1: disjoint
        // even cycles. Alternate buyers around each.
        std::vector<char> done(g.vertex_count(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!alive[v] || done[v]) continue;
            std::vector<Vertex> cyc;
            Vertex cur = v;
            do {
                cyc.push_back(cur);
                done[cur] = 1;
                Vertex next = -1;
                for (Vertex t : g.out_neighbors(cur))
                    if (alive[t]) {
                        next = t;
                        break;
                    }
                cur = next;
            } while (cur != v);
            events.push_back({RemovalEvent::kCycle, -1, -1, std::move(cyc)});
        }
    });
    PureSolveReport rep;
    rep.method = SolveMethod::delta1;
    rep.exists = true;
    rep.witness = replay(g, events);
    return rep;
}

bool terminal_even_applies(const Digraph& g) {
    auto scc = strongly_connected_components(g);
    for (size_t i = 0; i < scc.components.size(); ++i) {
        if (!scc.terminal[i] || scc.components[i].size() == 1) continue;
        std::vector<char> keep(g.vertex_count(), 0);
        for (Vertex v : scc.components[i]) keep[v] = 1;
        if (!find_even_directed_cycle(g.induced(keep))) return false;
    }
    return true;
}

PureSolveReport solve_terminal_even(const GameInstance& inst) {
    inst.validate();
    if (inst.k != 1) throw ValidationError("solve_terminal_even: needs k = 1");
    const Digraph& g = inst.graph;
    const int n = g.vertex_count();
    auto scc = strongly_connected_components(g);

    std::vector<char> in_r(n, 0);
    std::vector<Arc> r_arcs;
    for (size_t i = 0; i < scc.components.size(); ++i) {
        if (!scc.terminal[i]) continue;
        const auto& comp = scc.components[i];
        if (comp.size() == 1) {
            in_r[comp[0]] = 1;
            continue;
        }
        std::vector<char> keep(n, 0);
        for (Vertex v : comp) keep[v] = 1;
        std::vector<Vertex> orig;
        auto sub = g.induced(keep, &orig);
        auto cycle = find_even_directed_cycle(sub);
        if (!cycle)
            throw ValidationError("terminal component containing vertex " +
                                  std::to_string(comp[0]) + " has no even cycle");
        for (size_t j = 0; j < cycle->size(); ++j) {
            Vertex u = orig[(*cycle)[j]];
            Vertex v = orig[(*cycle)[(j + 1) % cycle->size()]];
            r_arcs.push_back({u, v});
            in_r[u] = 1;
        }
    }
    // Attach the rest one arc at a time, lowest-id vertex then target first.
    for (;;) {
        Vertex pick = -1, target = -1;
        for (Vertex v = 0; v < n && pick == -1; ++v) {
            if (in_r[v]) continue;
            for (Vertex t : g.out_neighbors(v))
                if (in_r[t]) {
                    pick = v;
                    target = t;
                    break;
                }
        }
        if (pick == -1) break;
        r_arcs.push_back({pick, target});
        in_r[pick] = 1;
    }
    if (std::find(in_r.begin(), in_r.end(), 0) != in_r.end())
        throw ValidationError("terminal-even construction could not span the digraph");

    GameInstance sub{Digraph(n, std::move(r_arcs)), 1, inst.c};
    auto rep = solve_delta1_no_odd(sub);
    rep.method = SolveMethod::terminal_even;
    return rep;
}

PureSolveReport solve_bipartite(const GameInstance& inst) {
    inst.validate();
    if (inst.k != 1) throw ValidationError("solve_bipartite: needs k = 1");
    std::vector<Vertex> odd;
    if (!is_underlying_bipartite(inst.graph, &odd)) {
        std::string cyc;
        for (Vertex v : odd) cyc += " " + std::to_string(v);
        throw ValidationError("solve_bipartite: odd underlying cycle:" + cyc);
    }
    auto rep = solve_terminal_even(inst);
    rep.method = SolveMethod::bipartite;
    return rep;
}

PureSolveReport dispatch_pure(const GameInstance& inst, int bound) {
    inst.validate();
    const Digraph& g = inst.graph;
    if (inst.k == 1) {
        if (is_acyclic(g)) return solve_acyclic(inst);
        if (is_underlying_bipartite(g)) return solve_bipartite(inst);
        if (delta1_no_odd_applies(g)) return solve_delta1_no_odd(inst);
        if (terminal_even_applies(g)) return solve_terminal_even(inst);
        if (g.vertex_count() >= 2 && is_strong(g)) return solve_strong_k1(inst, bound);
    }
    try {
        return brute_force_pure_nash(inst, OracleMode::any, bound);
    } catch (const BoundExceeded&) {
        PureSolveReport rep;
        rep.decided = false;
        rep.method = SolveMethod::unknown;
        return rep;
    }
}

}  // namespace pgg
