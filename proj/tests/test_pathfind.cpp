#include "doctest.h"

#include "binpath/instance_gen.hpp"
#include "binpath/oracle.hpp"
#include "binpath/pathfind.hpp"

#include "fixtures.hpp"

#include <random>
#include <stdexcept>

using namespace binpath;

TEST_CASE("earliest path on the benchmark network") {
    const auto p = earliest_path(fixtures::benchmark());
    REQUIRE(p.has_value());
    CHECK(p->nodes == std::vector<int>{1, 2, 4, 6});
    CHECK(p->arc_ids == std::vector<int>{1, 3, 7});
    CHECK(p->weight == LexWeight::from_u64(69));
    CHECK(p->vector.to_string() == "10100010");
}

TEST_CASE("latest path on the benchmark network") {
    const auto p = latest_path(fixtures::benchmark());
    REQUIRE(p.has_value());
    CHECK(p->nodes == std::vector<int>{1, 3, 5, 6});
    CHECK(p->arc_ids == std::vector<int>{2, 5, 8});
    CHECK(p->weight == LexWeight::from_u64(73)); // 64 + 8 + 1
    CHECK(p->vector.to_string() == "01001001");
}

TEST_CASE("diamond network extremes") {
    const Network net = fixtures::diamond();
    const auto earliest = earliest_path(net);
    REQUIRE(earliest.has_value());
    CHECK(earliest->nodes == std::vector<int>{1, 2, 4});
    CHECK(earliest->vector.to_string() == "1010");
    CHECK(earliest->weight == LexWeight::from_u64(5));

    const auto latest = latest_path(net);
    REQUIRE(latest.has_value());
    CHECK(latest->nodes == std::vector<int>{1, 3, 4});
    CHECK(latest->arc_ids == std::vector<int>{2, 4});
    CHECK(latest->weight == LexWeight::from_u64(5)); // 4 + 1 under reversed weights
}

TEST_CASE("single edge network") {
    const Network net = fixtures::single_edge();
    const auto earliest = earliest_path(net);
    REQUIRE(earliest.has_value());
    CHECK(earliest->nodes == std::vector<int>{1, 2});
    CHECK(earliest->weight == LexWeight::from_u64(1));
    const auto latest = latest_path(net);
    REQUIRE(latest.has_value());
    CHECK(latest->nodes == std::vector<int>{1, 2});
    CHECK(latest->weight == LexWeight::from_u64(1)); // 2^0 with m = 1
}

TEST_CASE("unreachable sink yields no path") {
    CHECK_FALSE(earliest_path(fixtures::two_components()).has_value());
    CHECK_FALSE(latest_path(fixtures::two_components()).has_value());
}

TEST_CASE("scheme arc count must match the network") {
    CHECK_THROWS_AS(binary_dijkstra(fixtures::diamond(), earliest_scheme(5)),
                    std::invalid_argument);
}

TEST_CASE("dijkstra agrees with exhaustive path enumeration") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const Network net = random_instance(rng);
        const auto earliest = earliest_path(net);
        const auto latest = latest_path(net);
        REQUIRE(earliest.has_value());
        REQUIRE(latest.has_value());

        const auto oracle_earliest = oracle_extreme_path(net, PathObjective::min_earliest_weight);
        const auto oracle_latest = oracle_extreme_path(net, PathObjective::min_latest_weight);
        REQUIRE(oracle_earliest.has_value());
        REQUIRE(oracle_latest.has_value());
        CHECK(earliest->weight == oracle_earliest->weight);
        CHECK(earliest->vector == oracle_earliest->vector);
        CHECK(earliest->nodes == oracle_earliest->nodes);
        CHECK(latest->weight == oracle_latest->weight);
        CHECK(latest->vector == oracle_latest->vector);
    }
}

TEST_CASE("path weight equals the bitwise union of its arc weights") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const Network net = random_instance(rng);
        const auto earliest = earliest_path(net);
        REQUIRE(earliest.has_value());
        CHECK(earliest->weight == vector_value(earliest->vector));

        // Folding the single-bit weights through the adder gives the same value.
        const auto latest = latest_path(net);
        REQUIRE(latest.has_value());
        LexWeight folded;
        const auto scheme = latest_scheme(net.arc_count());
        for (int a : latest->arc_ids) folded = lex_add(folded, scheme.arc_weight(a));
        CHECK(folded == latest->weight);
    }
}

TEST_CASE("every vector preceding the earliest vector is disconnected") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const Network net = random_instance(rng);
        const auto earliest = earliest_path(net);
        REQUIRE(earliest.has_value());
        const std::uint64_t bound = vector_value(earliest->vector).to_u64();
        for (std::uint64_t v = 0; v < bound; ++v) CHECK_FALSE(is_st_connected(net, v));
    }
}

TEST_CASE("all simple path weights are pairwise distinct") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const Network net = random_instance(rng);
        const auto paths = enumerate_simple_paths(net);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (std::size_t j = i + 1; j < paths.size(); ++j) {
                CHECK(paths[i].earliest_weight != paths[j].earliest_weight);
                CHECK(paths[i].latest_weight != paths[j].latest_weight);
            }
        }
    }
}
