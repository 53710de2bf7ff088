#pragma once

#include <random>
#include <vector>

#include "binpath/network.hpp"

namespace binpath {

// Random connected undirected network: a random spanning tree plus random
// extra arcs, arc order shuffled, source and sink drawn as distinct nodes.
// Requires n - 1 <= m <= n(n-1)/2.
Network random_connected_network(std::mt19937_64& rng, int node_count, int arc_count);

// Desk-scale test instance: n in [3,8], m in [n-1, min(14, n(n-1)/2)].
Network random_instance(std::mt19937_64& rng);

// One probability per arc, each drawn from {0.5, 0.9}.
std::vector<double> random_probs(std::mt19937_64& rng, int arc_count);

} // namespace binpath
