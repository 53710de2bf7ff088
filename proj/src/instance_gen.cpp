#include "binpath/instance_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace binpath {

Network random_connected_network(std::mt19937_64& rng, int node_count, int arc_count) {
    const long long max_arcs = static_cast<long long>(node_count) * (node_count - 1) / 2;
    if (node_count < 2 || arc_count < node_count - 1 || arc_count > max_arcs)
        throw std::invalid_argument("infeasible node/arc counts");

    std::vector<int> order(node_count);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);

    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> endpoints;
    endpoints.reserve(arc_count);
    // Random spanning tree: attach each node to an earlier one.
    for (int i = 1; i < node_count; ++i) {
        const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
        endpoints.emplace_back(order[i], order[j]);
        used.insert(std::minmax(order[i], order[j]));
    }
    std::uniform_int_distribution<int> pick(1, node_count);
    while (static_cast<int>(endpoints.size()) < arc_count) {
        const int u = pick(rng), v = pick(rng);
        if (u == v || !used.insert(std::minmax(u, v)).second) continue;
        endpoints.emplace_back(u, v);
    }
    std::shuffle(endpoints.begin(), endpoints.end(), rng);

    const int source = pick(rng);
    int sink = pick(rng);
    while (sink == source) sink = pick(rng);
    return Network(node_count, endpoints, source, sink);
}

Network random_instance(std::mt19937_64& rng) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const int max_m = std::min(14, n * (n - 1) / 2);
    const int m = std::uniform_int_distribution<int>(n - 1, max_m)(rng);
    return random_connected_network(rng, n, m);
}

std::vector<double> random_probs(std::mt19937_64& rng, int arc_count) {
    std::vector<double> probs(arc_count);
    std::bernoulli_distribution coin(0.5);
    for (double& p : probs) p = coin(rng) ? 0.9 : 0.5;
    return probs;
}

} // namespace binpath
