#pragma once

#include "pgg/game.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgg {

constexpr int kDefaultOracleBound = 22;

// Reversed star: all arcs leaf -> root exist in the host digraph.
struct Star {
    Vertex root;
    std::vector<Vertex> leaves;  // non-empty, sorted
};

struct RGalaxy {
    std::vector<Star> stars;  // vertex-disjoint
    bool spanning = false;

    std::vector<Vertex> leaves() const;
    std::vector<Vertex> roots() const;
};

enum class SolveMethod { oracle, strong_k1, acyclic, delta1, terminal_even, bipartite, unknown };

std::string to_string(SolveMethod m);

struct PureSolveReport {
    bool decided = true;  // false only when every applicable method was out of bounds
    bool exists = false;
    std::optional<BuyerSet> witness;  // a pure-Nash set, when one exists
    SolveMethod method = SolveMethod::unknown;
    std::uint64_t sets_examined = 0;
    // Filled by the oracle depending on mode:
    std::optional<std::vector<std::vector<Vertex>>> all_sets;
    std::optional<int> min_size, max_size;
};

enum class OracleMode { any, all, min, max };

// Exhaustive subset oracle. Refuses (BoundExceeded) when n > bound.
PureSolveReport brute_force_pure_nash(const GameInstance& inst,
                                      OracleMode mode = OracleMode::any,
                                      int bound = kDefaultOracleBound);

// Complete backtracking search for a k-pure-Nash set with unit propagation;
// exponential worst case but effective far beyond the subset oracle on
// structured instances (it is the workhorse behind the gadget equivalence
// checks). Returns the witness when one exists.
std::optional<BuyerSet> search_pure_nash(const GameInstance& inst);

// The two directions of the spanning-r-galaxy correspondence at k = 1.
BuyerSet leaves_to_nash(const Digraph& g, const RGalaxy& galaxy);
RGalaxy nash_to_galaxy(const Digraph& g, const std::vector<Vertex>& S);

struct EvenStrongVerdict {
    bool exists = false;
    std::vector<Vertex> witness;  // even-size vertex set inducing a strong subdigraph
    std::string fast_path;        // which rule decided: "even-order" | "even-cycle" |
                                  // "matching-deficiency" | "subset-enumeration"
};

// Decision for strong g, n >= 2: does some even-size W induce a strong
// subdigraph? Fast paths first, exhaustive even-subset fallback within bound.
EvenStrongVerdict decide_even_strong_subdigraph(const Digraph& g,
                                                int bound = kDefaultOracleBound);

PureSolveReport solve_strong_k1(const GameInstance& inst, int bound = kDefaultOracleBound);

// The four constructive classes (k = 1 only).
PureSolveReport solve_acyclic(const GameInstance& inst);
PureSolveReport solve_delta1_no_odd(const GameInstance& inst);
PureSolveReport solve_terminal_even(const GameInstance& inst);
PureSolveReport solve_bipartite(const GameInstance& inst);

// Class detectors used by the dispatcher (and tested independently).
bool delta1_no_odd_applies(const Digraph& g);
bool terminal_even_applies(const Digraph& g);

// Routes to the first applicable method: constructive classes, then the
// strong-k1 decision, then the oracle. method = unknown when nothing applies
// within bounds.
PureSolveReport dispatch_pure(const GameInstance& inst, int bound = kDefaultOracleBound);

}  // namespace pgg
