#pragma once

#include "pgg/digraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pgg {

constexpr std::uint64_t kDefaultCycleBudget = 1'000'000;

struct CycleEnumeration {
    // Each cycle is a vertex sequence v0 v1 ... v_{l-1} with arcs v_i -> v_{i+1}
    // and v_{l-1} -> v0; v0 is the lowest id on the cycle. 2-cycles included.
    std::vector<std::vector<Vertex>> cycles;
    bool truncated = false;  // budget hit before the enumeration finished
};

// Exhaustive when the total count fits in max_count, otherwise truncated.
CycleEnumeration enumerate_simple_directed_cycles(const Digraph& g,
                                                  std::uint64_t max_count = kDefaultCycleBudget);

// First even-length simple directed cycle in enumeration order, if any.
// Throws BoundExceeded when the budget runs out before either finding one or
// finishing the enumeration.
std::optional<std::vector<Vertex>> find_even_directed_cycle(
    const Digraph& g, std::uint64_t budget = kDefaultCycleBudget);

}  // namespace pgg
