#include "doctest.h"

#include "binpath/errors.hpp"
#include "binpath/instance_gen.hpp"
#include "binpath/oracle.hpp"
#include "binpath/pathfind.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace binpath;

TEST_CASE("simple path enumeration on the fixtures") {
    const auto paths = enumerate_simple_paths(fixtures::benchmark());
    REQUIRE(paths.size() == 7);
    std::set<std::vector<int>> nodes;
    for (const auto& p : paths) nodes.insert(p.nodes);
    // Hand-verified list for the benchmark network.
    const std::set<std::vector<int>> expected = {
        {1, 2, 4, 6},    {1, 2, 5, 6},    {1, 2, 4, 5, 6},   {1, 2, 5, 4, 6},
        {1, 3, 5, 6},    {1, 3, 5, 4, 6}, {1, 3, 5, 2, 4, 6},
    };
    CHECK(nodes == expected);

    CHECK(enumerate_simple_paths(fixtures::diamond()).size() == 2);
    CHECK(enumerate_simple_paths(fixtures::single_edge()).size() == 1);
    CHECK(enumerate_simple_paths(fixtures::two_components()).empty());
}

TEST_CASE("each enumerated path carries consistent weights") {
    for (const auto& p : enumerate_simple_paths(fixtures::benchmark())) {
        CHECK(p.earliest_weight == vector_value(p.vector));
        CHECK(p.vector.count() == p.arc_ids.size());
        CHECK(p.nodes.size() == p.arc_ids.size() + 1);
    }
}

TEST_CASE("extreme paths over the benchmark enumeration") {
    const Network net = fixtures::benchmark();
    const auto earliest = oracle_extreme_path(net, PathObjective::min_earliest_weight);
    REQUIRE(earliest.has_value());
    CHECK(earliest->weight == LexWeight::from_u64(69));
    CHECK(earliest->arc_ids == std::vector<int>{1, 3, 7});

    const auto latest = oracle_extreme_path(net, PathObjective::min_latest_weight);
    REQUIRE(latest.has_value());
    CHECK(latest->weight == LexWeight::from_u64(73));
    CHECK(latest->arc_ids == std::vector<int>{2, 5, 8});

    const auto max_value = oracle_extreme_path(net, PathObjective::max_vector_value);
    REQUIRE(max_value.has_value());
    CHECK(max_value->weight == LexWeight::from_u64(165));
    CHECK(max_value->nodes == std::vector<int>{1, 2, 4, 5, 6});
    std::vector<int> arcs = max_value->arc_ids;
    std::sort(arcs.begin(), arcs.end());
    CHECK(arcs == std::vector<int>{1, 3, 6, 8});

    CHECK_FALSE(oracle_extreme_path(fixtures::two_components(),
                                    PathObjective::min_earliest_weight)
                    .has_value());
}

TEST_CASE("first connected vector by forward scan") {
    CHECK(oracle_first_connected(fixtures::benchmark())->to_string() == "10100010");
    CHECK(oracle_first_connected(fixtures::diamond())->to_string() == "1010");
    CHECK(oracle_first_connected(fixtures::single_edge())->to_string() == "1");
    CHECK_FALSE(oracle_first_connected(fixtures::two_components()).has_value());
}

TEST_CASE("last disconnected vector by backward scan") {
    const auto diamond = oracle_last_disconnected(fixtures::diamond());
    REQUIRE(diamond.has_value());
    CHECK(diamond->to_string() == "0011");
    CHECK(vector_value(*diamond) == LexWeight::from_u64(12));

    const auto bench = oracle_last_disconnected(fixtures::benchmark());
    REQUIRE(bench.has_value());
    CHECK(bench->to_string() == "00111111");
    CHECK(vector_value(*bench) == LexWeight::from_u64(252));

    const auto single = oracle_last_disconnected(fixtures::single_edge());
    REQUIRE(single.has_value());
    CHECK(single->to_string() == "0");
}

TEST_CASE("greedy last-disconnected matches the oracle") {
    CHECK(last_disconnected_greedy(fixtures::diamond()).to_string() == "0011");
    CHECK(last_disconnected_greedy(fixtures::benchmark()).to_string() == "00111111");
    CHECK(last_disconnected_greedy(fixtures::single_edge()).to_string() == "0");

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const Network net = random_instance(rng);
        CHECK(last_disconnected_greedy(net) == *oracle_last_disconnected(net));
    }
}

TEST_CASE("scan caps require force") {
    // 25 arcs over 7 nodes is above the cap but structurally fine.
    std::mt19937_64 rng(61);
    const Network big = random_connected_network(rng, 8, 25);
    CHECK_THROWS_AS(oracle_first_connected(big), CapExceeded);
    CHECK_THROWS_AS(oracle_last_disconnected(big), CapExceeded);
    CHECK_THROWS_AS(region_census(big), CapExceeded);
    CHECK_THROWS_AS(reliability_exact(big, false), CapExceeded);
    CHECK_THROWS_AS(enumerate_simple_paths(big), CapExceeded);
    // With force the same scans run.
    CHECK(oracle_first_connected(big, true).has_value());
}

TEST_CASE("region census of the diamond network") {
    const RegionReport r = region_census(fixtures::diamond());
    CHECK(r.earliest_vector.to_string() == "1010");
    CHECK(r.earliest_value == LexWeight::from_u64(5));
    CHECK(r.latest_vector.to_string() == "0101");
    CHECK(r.latest_value == LexWeight::from_u64(10));
    CHECK(r.last_disconnected_value == LexWeight::from_u64(12));
    CHECK(r.max_value_path_vector.to_string() == "0101");

    CHECK(r.before.total == 5);
    CHECK(r.before.disconnected == 5);
    CHECK(r.before.connected == 0);
    CHECK(r.before.simple_path == 0);
    CHECK(r.between.total == 6);
    CHECK(r.between.connected == 3);
    CHECK(r.between.disconnected == 3);
    CHECK(r.between.simple_path == 2);
    CHECK(r.after.total == 5);
    CHECK(r.after.connected == 4);
    CHECK(r.after.disconnected == 1);
    CHECK(r.after.simple_path == 0);

    CHECK(r.disconnected_after_latest == 1); // witness: value 12
    CHECK(r.simple_paths_after_latest == 0);
    CHECK(r.before.total + r.between.total + r.after.total == 16);
}

TEST_CASE("region census of the benchmark network") {
    const RegionReport r = region_census(fixtures::benchmark());
    CHECK(r.earliest_value == LexWeight::from_u64(69));
    CHECK(r.latest_value == LexWeight::from_u64(146));
    CHECK(r.last_disconnected_value == LexWeight::from_u64(252));
    CHECK(compare(r.last_disconnected_value, r.latest_value) > 0);
    CHECK(r.max_value_path_vector.to_string() == "10100101"); // arcs {1,3,6,8}

    CHECK(r.before.total == 69);
    CHECK(r.before.disconnected == 69);
    CHECK(r.before.connected == 0);
    CHECK(r.between.total == 78);
    CHECK(r.between.connected == 31);
    CHECK(r.between.simple_path == 6);
    CHECK(r.after.total == 109);
    CHECK(r.after.connected == 60);
    CHECK(r.after.simple_path == 1); // the max-value path sits after the latest vector
    CHECK(r.disconnected_after_latest == 49);
    CHECK(r.simple_paths_after_latest == 1);
    CHECK(r.before.total + r.between.total + r.after.total == 256);
}

TEST_CASE("region census of the single edge") {
    const RegionReport r = region_census(fixtures::single_edge());
    CHECK(r.before.total == 1);
    CHECK(r.before.disconnected == 1);
    CHECK(r.between.total == 1);
    CHECK(r.between.connected == 1);
    CHECK(r.after.total == 0);
    CHECK(r.disconnected_after_latest == 0);
    CHECK(r.simple_paths_after_latest == 0);
}

TEST_CASE("region census requires a source-sink path") {
    CHECK_THROWS_AS(region_census(fixtures::two_components()), NoPathError);
}

TEST_CASE("census invariants on random instances") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        const Network net = random_instance(rng);
        const RegionReport r = region_census(net);
        const std::uint64_t all = std::uint64_t{1} << net.arc_count();
        CHECK(r.before.total + r.between.total + r.after.total == all);
        CHECK(r.before.connected == 0);
        CHECK(r.before.disconnected == r.before.total);
        CHECK(r.before.total == r.earliest_value.to_u64());
        CHECK(r.after.disconnected == r.disconnected_after_latest);
        CHECK(r.after.simple_path == r.simple_paths_after_latest);
    }
}

TEST_CASE("exact reliability on the fixtures") {
    const auto diamond =
        reliability_exact(fixtures::diamond(), std::vector<double>(4, 0.5), false);
    CHECK(diamond.probability == doctest::Approx(0.4375).epsilon(1e-15));
    CHECK(diamond.vectors_evaluated == 16);
    CHECK(diamond.vectors_pruned == 0);

    const Network single = Network::parse("2 1 1 2\n1 2 0.9\n");
    CHECK(reliability_exact(single, false).probability == doctest::Approx(0.9).epsilon(1e-15));

    // All-0.9 diamond, exhaustively computed: 0.9639.
    const std::vector<double> nines(4, 0.9);
    CHECK(reliability_exact(fixtures::diamond(), nines, false).probability ==
          doctest::Approx(0.9639).epsilon(1e-12));

    // Benchmark at p = 0.5 everywhere: 91 connected vectors of 256.
    CHECK(reliability_exact(fixtures::benchmark(), std::vector<double>(8, 0.5), false)
              .probability == doctest::Approx(91.0 / 256.0).epsilon(1e-15));
}

TEST_CASE("pruned reliability skips exactly the before-earliest range") {
    const Network net = fixtures::benchmark();
    const auto plain = reliability_exact(net, std::vector<double>(8, 0.5), false);
    const auto pruned = reliability_exact(net, std::vector<double>(8, 0.5), true);
    CHECK(pruned.vectors_pruned == 69);
    CHECK(pruned.vectors_evaluated == 256 - 69);
    CHECK(plain.probability == doctest::Approx(pruned.probability).epsilon(1e-15));

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const Network inst = random_instance(rng);
        const auto probs = random_probs(rng, inst.arc_count());
        const auto a = reliability_exact(inst, probs, false);
        const auto b = reliability_exact(inst, probs, true);
        CHECK(std::abs(a.probability - b.probability) <= 1e-12);
        CHECK(b.vectors_pruned == vector_value(earliest_path(inst)->vector).to_u64());
        CHECK(a.vectors_evaluated + a.vectors_pruned == b.vectors_evaluated + b.vectors_pruned);
    }
}

TEST_CASE("reliability input validation") {
    CHECK_THROWS_AS(reliability_exact(fixtures::diamond(), std::vector<double>{0.5}, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        reliability_exact(fixtures::diamond(), std::vector<double>{0.5, 0.5, 0.5, 1.5}, false),
        std::invalid_argument);
}

TEST_CASE("no-path reliability is zero and prune is a no-op") {
    const auto r = reliability_exact(fixtures::two_components(), true);
    CHECK(r.probability == 0.0);
    CHECK(r.vectors_pruned == 0);
    CHECK(r.vectors_evaluated == 4);
}

TEST_CASE("no simple-path vector follows the max-value path vector") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const Network net = random_instance(rng);
        const auto max_path = oracle_extreme_path(net, PathObjective::max_vector_value);
        REQUIRE(max_path.has_value());
        const std::uint64_t bound = vector_value(max_path->vector).to_u64();
        for (const auto& p : enumerate_simple_paths(net))
            CHECK(p.vector.value_u64() <= bound);
    }
}
