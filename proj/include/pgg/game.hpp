#pragma once

#include "pgg/digraph.hpp"
#include "pgg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pgg {

// One public goods game: network, sharing capacity k, price c in (0,1).
struct GameInstance {
    Digraph graph;
    int k = 1;
    Rational c = Rational(1, 2);

    void validate() const;  // throws ValidationError
    // k_i = min(k, d^+(v)): the number of out-neighbors a buyer must nominate.
    int capacity(Vertex v) const;
};

struct PureAction {
    bool buys = false;
    std::vector<Vertex> targets;  // sorted; empty for abstainers and sinks
};
using PureProfile = std::vector<PureAction>;

struct MixedAction {
    double buy_prob = 0.0;
    // Conditional nomination distribution; weights sum to 1 when buy_prob > 0.
    std::vector<std::pair<std::vector<Vertex>, double>> nominations;
};
using MixedProfile = std::vector<MixedAction>;

using Extension = std::map<Vertex, std::vector<Vertex>>;  // buyer -> nominations

struct BuyerSet {
    std::vector<Vertex> members;  // sorted
    std::optional<Extension> witness_extension;
};

struct CostReport {
    std::vector<Rational> player_costs;
    Rational social_cost;
};

struct MixedCostReport {
    std::vector<double> player_costs;
    std::vector<double> abstain_failure_prob;  // u_i per player
    double social_cost = 0.0;
};

struct NashVerdict {
    bool is_nash = false;
    std::optional<Vertex> deviating_vertex;
    std::string reason;
};

struct SetVerdict {
    bool holds = false;
    std::optional<Extension> witness_extension;
    std::string reason;
};

struct MixedNashVerdict {
    bool is_nash = false;
    double worst_regret = 0.0;
    std::optional<Vertex> deviating_vertex;
};

// Throws ValidationError naming the offending vertex when x is malformed.
void validate_pure_profile(const GameInstance& inst, const PureProfile& x);
void validate_mixed_profile(const GameInstance& inst, const MixedProfile& sigma);

CostReport pure_costs(const GameInstance& inst, const PureProfile& x);

// Nash iff every abstainer is nominated by some buyer and no buyer is
// nominated by any buyer.
NashVerdict is_pure_nash_profile(const GameInstance& inst, const PureProfile& x);

// S is a k-pure-Nash set iff each buyer has >= k_i out-neighbors outside S and
// the cover flow from S reaches all of V \ S. The witness extension pads the
// flow assignment with lowest-id eligible targets.
SetVerdict is_pure_nash_set(const GameInstance& inst, const std::vector<Vertex>& S);

// Like above without the independence requirement (nominations may land in S).
SetVerdict is_buyer_set(const GameInstance& inst, const std::vector<Vertex>& S);

MixedCostReport expected_costs(const GameInstance& inst, const MixedProfile& sigma);

MixedNashVerdict is_mixed_nash(const GameInstance& inst, const MixedProfile& sigma,
                               double tol = 1e-9);

// Buyers of a pure profile / degenerate profile of a witnessed buyer set.
std::vector<Vertex> buyers_of(const PureProfile& x);
PureProfile profile_from_extension(const GameInstance& inst, const std::vector<Vertex>& S,
                                   const Extension& ext);
MixedProfile degenerate_mixed(const GameInstance& inst, const PureProfile& x);

}  // namespace pgg
