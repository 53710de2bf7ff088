#include "binpath/verify.hpp"

#include "binpath/bat.hpp"
#include "binpath/instance_gen.hpp"
#include "binpath/lex_weight.hpp"
#include "binpath/oracle.hpp"
#include "binpath/pathfind.hpp"

#include <cmath>
#include <cstdlib>

namespace binpath {

namespace {

enum CheckId {
    kPathValidity = 0,
    kEarliestCoherence,
    kBeforeEarliestDisconnected,
    kEarliestWeightOptimal,
    kLatestWeightOptimal,
    kGreedyLastDisconnected,
    kNoSimplePathAfterMaxValue,
    kXfcVariantsConnected,
    kReliabilityPruneConsistent,
    kClaimAfterLatestConnected,
    kClaimAfterLatestNoSimplePath,
    kCheckCount
};

bool valid_simple_path(const Network& net, const PathResult& p) {
    if (p.nodes.size() < 2 || p.nodes.front() != net.source() || p.nodes.back() != net.sink())
        return false;
    if (p.arc_ids.size() != p.nodes.size() - 1) return false;
    std::vector<char> seen(static_cast<std::size_t>(net.node_count()) + 1, 0);
    LexWeight total;
    StateVector indicator(net.arc_count());
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const int v = p.nodes[i];
        if (v < 1 || v > net.node_count() || seen[v]) return false;
        seen[v] = 1;
        if (i == 0) continue;
        const int a = p.arc_ids[i - 1];
        if (a < 1 || a > net.arc_count()) return false;
        const Arc& arc = net.arc(a);
        const int prev = p.nodes[i - 1];
        if (!((arc.u == prev && arc.v == v) || (arc.v == prev && arc.u == v))) return false;
        indicator.set_bit(a, true);
    }
    return indicator == p.vector && p.vector.count() == p.arc_ids.size();
}

} // namespace

bool VerifyReport::mandatory_passed() const {
    for (const VerifyCheck& c : checks)
        if (c.mandatory && !c.passed()) return false;
    return true;
}

VerifyReport run_verify(std::uint64_t seed, std::uint64_t cases) {
    VerifyReport report;
    report.seed = seed;
    report.cases = cases;
    report.checks = {
        {"dijkstra-path-validity", true},
        {"earliest-coherence", true},
        {"before-earliest-disconnected", true},
        {"earliest-weight-optimal", true},
        {"latest-weight-optimal", true},
        {"last-disconnected-greedy-agrees", true},
        {"no-simple-path-after-max-value-path", true},
        {"xfc-variants-connected", true},
        {"reliability-prune-consistent", true},
        {"claim-after-latest-all-connected", false},
        {"claim-after-latest-no-simple-path", false},
    };
    auto& checks = report.checks;
    auto record = [&](CheckId id, bool violated) {
        ++checks[id].checked;
        if (violated) ++checks[id].violations;
    };

    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < cases; ++k) {
        const Network net = random_instance(rng);
        const auto probs = random_probs(rng, net.arc_count());
        const int m = net.arc_count();

        const auto earliest = earliest_path(net);
        const auto latest = latest_path(net);
        // The corpus is connected by construction, so both must exist.
        record(kPathValidity, !earliest || !latest || !valid_simple_path(net, *earliest) ||
                                  !valid_simple_path(net, *latest) ||
                                  earliest->weight != vector_value(earliest->vector));
        if (!earliest || !latest) continue;

        const auto first_connected = oracle_first_connected(net);
        const StateVector xfc_correct = find_xfc_correct(net);
        const StateVector xfc_paper = find_xfc_paper(net);
        record(kEarliestCoherence, !first_connected || *first_connected != earliest->vector ||
                                       xfc_correct != earliest->vector);

        const std::uint64_t earliest_value = vector_value(earliest->vector).to_u64();
        bool connected_before = false;
        for (std::uint64_t value = 0; value < earliest_value; ++value)
            if (is_st_connected(net, value)) {
                connected_before = true;
                break;
            }
        record(kBeforeEarliestDisconnected, connected_before);

        const auto oracle_earliest = oracle_extreme_path(net, PathObjective::min_earliest_weight);
        const auto oracle_latest = oracle_extreme_path(net, PathObjective::min_latest_weight);
        record(kEarliestWeightOptimal, !oracle_earliest ||
                                           oracle_earliest->weight != earliest->weight ||
                                           oracle_earliest->vector != earliest->vector);
        record(kLatestWeightOptimal, !oracle_latest || oracle_latest->weight != latest->weight ||
                                         oracle_latest->vector != latest->vector);

        const auto oracle_ld = oracle_last_disconnected(net);
        record(kGreedyLastDisconnected, !oracle_ld || last_disconnected_greedy(net) != *oracle_ld);

        const auto max_path = oracle_extreme_path(net, PathObjective::max_vector_value);
        bool simple_after_max = false;
        {
            std::vector<char> is_path_value(std::size_t{1} << m, 0);
            for (const SimplePath& p : enumerate_simple_paths(net))
                is_path_value[p.vector.value_u64()] = 1;
            const std::uint64_t max_value = vector_value(max_path->vector).to_u64();
            for (std::uint64_t value = max_value + 1; value < (std::uint64_t{1} << m); ++value)
                if (is_path_value[value]) {
                    simple_after_max = true;
                    break;
                }
        }
        record(kNoSimplePathAfterMaxValue, simple_after_max);

        record(kXfcVariantsConnected,
               !is_st_connected(net, xfc_correct) || !is_st_connected(net, xfc_paper));

        const auto plain = reliability_exact(net, probs, /*prune=*/false);
        const auto pruned = reliability_exact(net, probs, /*prune=*/true);
        record(kReliabilityPruneConsistent,
               std::abs(plain.probability - pruned.probability) > 1e-12 ||
                   pruned.vectors_pruned != earliest_value ||
                   pruned.vectors_evaluated + pruned.vectors_pruned != (std::uint64_t{1} << m));

        const std::uint64_t latest_value = vector_value(latest->vector).to_u64();
        bool disconnected_after = false;
        bool simple_path_after = false;
        for (std::uint64_t value = latest_value + 1; value < (std::uint64_t{1} << m); ++value) {
            if (!is_st_connected(net, value)) disconnected_after = true;
        }
        for (const SimplePath& p : enumerate_simple_paths(net))
            if (p.vector.value_u64() > latest_value) simple_path_after = true;
        record(kClaimAfterLatestConnected, disconnected_after);
        record(kClaimAfterLatestNoSimplePath, simple_path_after);
    }
    return report;
}

} // namespace binpath
