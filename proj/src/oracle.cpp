#include "binpath/oracle.hpp"

#include "binpath/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace binpath {

namespace {

void check_scan_cap(const Network& net, bool force, const char* what) {
    const int m = net.arc_count();
    if (m > kOracleCap && !force)
        throw CapExceeded(std::string(what) + " over 2^" + std::to_string(m) +
                          " vectors exceeds the cap of 2^" + std::to_string(kOracleCap) +
                          " (use force to override)");
    if (m > 63)
        throw CapExceeded(std::string(what) + " is limited to 63 arcs");
}

struct PathCollector {
    const Network& net;
    std::vector<SimplePath>& out;
    std::vector<int> nodes;
    std::vector<int> arcs;
    std::vector<char> on_path;

    void dfs(int u) {
        if (u == net.sink()) {
            SimplePath p;
            p.nodes = nodes;
            p.arc_ids = arcs;
            p.vector = StateVector(net.arc_count());
            for (int a : arcs) p.vector.set_bit(a, true);
            p.earliest_weight = vector_value(p.vector);
            p.latest_weight = LexWeight::zero();
            for (int a : arcs)
                p.latest_weight = p.latest_weight + LexWeight::power_of_two(net.arc_count() - a);
            out.push_back(std::move(p));
            return;
        }
        for (const auto& nb : net.neighbors(u)) {
            if (on_path[nb.node]) continue;
            on_path[nb.node] = 1;
            nodes.push_back(nb.node);
            arcs.push_back(nb.arc);
            dfs(nb.node);
            arcs.pop_back();
            nodes.pop_back();
            on_path[nb.node] = 0;
        }
    }
};

} // namespace

std::vector<SimplePath> enumerate_simple_paths(const Network& net, bool force) {
    if (net.arc_count() > kOracleCap && !force)
        throw CapExceeded("simple-path enumeration above " + std::to_string(kOracleCap) +
                          " arcs requires force");
    std::vector<SimplePath> out;
    PathCollector collector{net, out, {net.source()}, {},
                            std::vector<char>(static_cast<std::size_t>(net.node_count()) + 1, 0)};
    collector.on_path[net.source()] = 1;
    collector.dfs(net.source());
    return out;
}

std::optional<PathResult> oracle_extreme_path(const Network& net, PathObjective objective,
                                              bool force) {
    auto paths = enumerate_simple_paths(net, force);
    if (paths.empty()) return std::nullopt;
    const SimplePath* best = &paths.front();
    auto key = [&](const SimplePath& p) -> const LexWeight& {
        return objective == PathObjective::min_latest_weight ? p.latest_weight : p.earliest_weight;
    };
    for (const SimplePath& p : paths) {
        const int c = compare(key(p), key(*best));
        if (objective == PathObjective::max_vector_value ? c > 0 : c < 0) best = &p;
    }
    PathResult r;
    r.nodes = best->nodes;
    r.arc_ids = best->arc_ids;
    r.vector = best->vector;
    r.weight = key(*best);
    return r;
}

std::optional<StateVector> oracle_first_connected(const Network& net, bool force) {
    check_scan_cap(net, force, "first-connected scan");
    const int m = net.arc_count();
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t value = 0; value < limit; ++value) {
        if (is_st_connected(net, value)) return StateVector::from_value(value, m);
    }
    return std::nullopt;
}

std::optional<StateVector> oracle_last_disconnected(const Network& net, bool force) {
    check_scan_cap(net, force, "last-disconnected scan");
    const int m = net.arc_count();
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t value = limit; value-- > 0;) {
        if (!is_st_connected(net, value)) return StateVector::from_value(value, m);
    }
    return std::nullopt;
}

StateVector last_disconnected_greedy(const Network& net) {
    const int m = net.arc_count();
    StateVector fixed(m);
    for (int j = m; j >= 1; --j) {
        // Keep arc j working only if the fixed working set plus a_j alone is
        // still disconnected; lower arcs are all failed at this point.
        const bool disconnected =
            !detail::st_connected_when(net, [&](int a) { return fixed.bit(a) || a == j; });
        if (disconnected) fixed.set_bit(j, true);
    }
    return fixed;
}

RegionReport region_census(const Network& net, bool force) {
    check_scan_cap(net, force, "region census");
    auto earliest = earliest_path(net);
    if (!earliest) throw NoPathError("network has no source-sink path");
    auto latest = latest_path(net);

    RegionReport report;
    report.earliest_vector = earliest->vector;
    report.earliest_value = vector_value(earliest->vector);
    report.latest_vector = latest->vector;
    report.latest_value = vector_value(latest->vector);
    report.last_disconnected_vector = *oracle_last_disconnected(net, force);
    report.last_disconnected_value = vector_value(report.last_disconnected_vector);
    report.max_value_path_vector = oracle_extreme_path(net, PathObjective::max_vector_value,
                                                       force)
                                       ->vector;

    std::unordered_set<std::uint64_t> path_values;
    for (const SimplePath& p : enumerate_simple_paths(net, force))
        path_values.insert(p.vector.value_u64());

    const std::uint64_t earliest_value = report.earliest_value.to_u64();
    const std::uint64_t latest_value = report.latest_value.to_u64();
    const std::uint64_t limit = std::uint64_t{1} << net.arc_count();
    for (std::uint64_t value = 0; value < limit; ++value) {
        RegionCounts& region = value < earliest_value ? report.before
                               : value <= latest_value ? report.between
                                                       : report.after;
        const bool connected = is_st_connected(net, value);
        const bool simple_path = path_values.contains(value);
        ++region.total;
        ++(connected ? region.connected : region.disconnected);
        if (simple_path) ++region.simple_path;
        if (value > latest_value) {
            if (!connected) ++report.disconnected_after_latest;
            if (simple_path) ++report.simple_paths_after_latest;
        }
    }
    return report;
}

ReliabilityResult reliability_exact(const Network& net, std::span<const double> probs,
                                    bool prune, bool force) {
    check_scan_cap(net, force, "reliability enumeration");
    const int m = net.arc_count();
    if (probs.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("need one probability per arc");
    for (double p : probs)
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0,1]");

    std::uint64_t start = 0;
    if (prune) {
        if (auto earliest = earliest_path(net)) start = vector_value(earliest->vector).to_u64();
    }

    const std::uint64_t limit = std::uint64_t{1} << m;
    double probability = 0.0;
    for (std::uint64_t value = start; value < limit; ++value) {
        if (!is_st_connected(net, value)) continue;
        double mass = 1.0;
        for (int i = 0; i < m; ++i)
            mass *= (value >> i) & 1u ? probs[i] : 1.0 - probs[i];
        probability += mass;
    }
    return {probability, limit - start, start};
}

ReliabilityResult reliability_exact(const Network& net, bool prune, bool force) {
    return reliability_exact(net, net.arc_probs(), prune, force);
}

} // namespace binpath
