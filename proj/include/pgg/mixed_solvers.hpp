#pragma once

#include "pgg/game.hpp"

namespace pgg {

// Per vertex with d+ >= 1: the single out-neighbor a buyer would nominate.
struct DesignationMap {
    std::vector<Vertex> designated;  // -1 for sinks
};

DesignationMap designate_lowest_out_neighbors(const Digraph& g);

// Three-phase linear-time mixed equilibrium for k = 1: designate, peel
// sources (buy with probability 1, their designated target with 0), then give
// every residual vertex (the graph is then disjoint designated cycles)
// probability 1 - c. Output passes is_mixed_nash at 1e-9.
MixedProfile solve_mixed_k1(const GameInstance& inst);

// Every vertex buys with probability p nominating its entire out-neighborhood.
// Requires d+(v) <= k everywhere; intended for k-regular instances with
// p = 1 - c^(1/k).
MixedProfile uniform_profile(const GameInstance& inst, double p);

}  // namespace pgg
