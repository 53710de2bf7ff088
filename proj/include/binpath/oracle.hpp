#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "binpath/lex_weight.hpp"
#include "binpath/network.hpp"
#include "binpath/pathfind.hpp"

// Brute-force ground truth at desk scale. Everything here works by
// exhaustive enumeration and never consults the Dijkstra implementation,
// except region_census, whose explicit job is to audit the Dijkstra
// boundaries against the enumerated truth.

namespace binpath {

// Exhaustive scans refuse to run above this many arcs without force.
inline constexpr int kOracleCap = 24;

struct SimplePath {
    std::vector<int> nodes;
    std::vector<int> arc_ids;
    StateVector vector;
    LexWeight earliest_weight; // sum of 2^(i-1) == vector value
    LexWeight latest_weight;   // sum of 2^(m-i)
};

// Every simple source-sink path, found by depth-first search with
// visited-node pruning. Throws CapExceeded for m > kOracleCap without force.
std::vector<SimplePath> enumerate_simple_paths(const Network& net, bool force = false);

enum class PathObjective { min_earliest_weight, min_latest_weight, max_vector_value };

// Scans all simple paths for the unique optimum of the chosen objective.
// The returned weight is the objective value.
std::optional<PathResult> oracle_extreme_path(const Network& net, PathObjective objective,
                                              bool force = false);

// First connected vector in BAT order, by forward scan; nullopt when no
// vector connects source to sink.
std::optional<StateVector> oracle_first_connected(const Network& net, bool force = false);

// BAT-maximal disconnected vector, by backward scan; every strictly later
// vector is connected. nullopt only if every vector were connected, which
// cannot happen with source != sink.
std::optional<StateVector> oracle_last_disconnected(const Network& net, bool force = false);

// Polynomial companion to oracle_last_disconnected. Scans arcs downward,
// keeping arc j failed-off unless the fixed working set plus a_j alone is
// still disconnected; disconnection is downward-closed, so the greedy fixed
// point is the BAT-maximal disconnected vector.
StateVector last_disconnected_greedy(const Network& net);

struct RegionCounts {
    std::uint64_t total = 0;
    std::uint64_t connected = 0;
    std::uint64_t disconnected = 0;
    std::uint64_t simple_path = 0; // vectors that are exactly a simple path's indicator
};

// Boundary vectors and the full census of the three-region split of all 2^m
// vectors: before the earliest-path vector, between earliest and latest
// (inclusive), after the latest-path vector. The two after-latest claims
// ("always connected" / "never a simple path") are counted, not assumed;
// nonzero counts are findings.
struct RegionReport {
    StateVector earliest_vector;
    LexWeight earliest_value;
    StateVector latest_vector;
    LexWeight latest_value;
    StateVector last_disconnected_vector;
    LexWeight last_disconnected_value;
    StateVector max_value_path_vector;
    RegionCounts before;
    RegionCounts between;
    RegionCounts after;
    std::uint64_t disconnected_after_latest = 0;
    std::uint64_t simple_paths_after_latest = 0;
};

// Throws NoPathError when the network has no source-sink path at all, and
// CapExceeded above the scan cap.
RegionReport region_census(const Network& net, bool force = false);

struct ReliabilityResult {
    double probability = 0.0;
    std::uint64_t vectors_evaluated = 0;
    std::uint64_t vectors_pruned = 0;
};

// Exact two-terminal reliability: the probability mass of all connected
// vectors, each arc working independently with its own probability. With
// prune set, the contiguous value range below the earliest-path vector is
// skipped outright (every vector there is disconnected).
ReliabilityResult reliability_exact(const Network& net, std::span<const double> probs,
                                    bool prune, bool force = false);

// Convenience overload using the per-arc probabilities carried by the network.
ReliabilityResult reliability_exact(const Network& net, bool prune, bool force = false);

} // namespace binpath
