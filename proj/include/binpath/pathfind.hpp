#pragma once

#include <optional>
#include <vector>

#include "binpath/lex_weight.hpp"
#include "binpath/network.hpp"

namespace binpath {

// A simple source-sink path together with its indicator vector and its total
// weight under the scheme that produced it.
struct PathResult {
    std::vector<int> nodes;   // source first, sink last
    std::vector<int> arc_ids; // arc_ids[k] joins nodes[k] and nodes[k+1]
    StateVector vector;       // indicator of arc_ids
    LexWeight weight;
};

// Dijkstra over exact power-of-two weights with a binary heap and early
// termination once the sink is settled. Distinct simple paths always have
// distinct weights under either scheme, so the optimum is unique.
// Returns nullopt when the sink is unreachable.
std::optional<PathResult> binary_dijkstra(const Network& net, const WeightScheme& scheme);

// The path whose indicator vector is BAT-minimal among all simple
// source-sink paths (weights 2^(i-1)).
std::optional<PathResult> earliest_path(const Network& net);

// The path minimizing the index-reversed weight sum over 2^(m-i).
std::optional<PathResult> latest_path(const Network& net);

} // namespace binpath
