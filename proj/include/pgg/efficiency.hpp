#pragma once

#include "pgg/game.hpp"
#include "pgg/pure_solvers.hpp"

#include <optional>
#include <vector>

namespace pgg {

struct EfficiencyReport {
    bool equilibria_exist = false;
    std::optional<int> pn, Pn;  // min/max equilibrium buyer counts
    int b = 0;                  // minimum buyer-set size
    std::optional<std::vector<Vertex>> pn_witness, Pn_witness;
    std::vector<Vertex> b_witness;
    Rational social_optimum;           // c * b
    std::optional<Rational> pos_ratio;  // pn / b
    std::optional<Rational> poa_ratio;  // Pn / b
    bool pos_bound_ok = true;  // pn/b <= k + 1/(k+1)
    bool poa_bound_ok = true;  // Pn/b <= k + 1
    bool b_lower_bound_ok = true;  // b >= ceil(n/(k+1))
};

struct MinBuyerResult {
    int size = 0;
    std::vector<Vertex> witness;
};

// Minimum |S| with is_buyer_set(S). k = 1 goes through the matching identity
// (with the witness re-verified); k >= 2 is an ascending-size exact search,
// refused above the bound.
MinBuyerResult min_buyer_set(const GameInstance& inst, int bound = kDefaultOracleBound);

// n - alpha'(D); equals b_1 for every digraph.
int b1_via_matching(const GameInstance& inst);

struct EquilibriumRange {
    bool exists = false;
    std::optional<int> pn, Pn;
    std::optional<std::vector<Vertex>> pn_witness, Pn_witness;
};

EquilibriumRange pure_equilibrium_range(const GameInstance& inst,
                                        int bound = kDefaultOracleBound);

struct SocialOptimum {
    Rational cost;  // c * b_k: price c < 1 forces full coverage at the optimum
    std::vector<Vertex> witness;
};

SocialOptimum social_optimum(const GameInstance& inst, int bound = kDefaultOracleBound);

// Assembles everything and checks the proved bounds; a bound violation throws
// (it would falsify the implementation, not the input).
EfficiencyReport ratios_and_bounds(const GameInstance& inst, int bound = kDefaultOracleBound);

struct DkrMixedReport {
    int k = 0, r = 0;
    int n = 0;
    Rational c;
    bool uniform_profile_is_nash = false;
    double max_cost_deviation = 0.0;  // max |E[cost_i] - c| under the uniform profile
    Rational mpn;                     // c * (2r+1)(k+1)
    Rational mb_exact;                // c * b_k (exact search)
    Rational mb_upper;                // (2r+2) * c
    Rational mb_lower;                // c * n / (k+1)
    Rational ratio_lower_bound;       // (k+1)(1 - 1/(2r+2))
    Rational ratio;                   // mpn / mb_exact
};

DkrMixedReport dkr_mixed_report(int k, int r, const Rational& c,
                                int bound = kDefaultOracleBound);

struct PosProbeEntry {
    std::string label;
    int n = 0;
    int pn = 0, b = 0;
    Rational ratio;
};

struct PosProbeResult {
    std::vector<PosProbeEntry> entries;
    Rational max_ratio;
};

// Conjecture probe over complete k-ary out-trees T_{k,r}, r in [2, r_max].
// pn comes from the odd-levels equilibrium (verifier-checked), b from an
// exact tree dynamic program, so sizes beyond the subset bound are fine.
PosProbeResult probe_pos_out_trees(int k, int r_max, const Rational& c);

// Probe over seeded random digraphs at k = 1 (oracle-driven).
PosProbeResult probe_pos_random(int count, int n, double arc_prob, unsigned seed,
                                const Rational& c);

// Exact minimum buyer-set size for an out-tree (every non-root has exactly
// one in-arc); used by the probe where subset search is out of reach.
int min_buyer_set_out_tree(const GameInstance& inst);

}  // namespace pgg
