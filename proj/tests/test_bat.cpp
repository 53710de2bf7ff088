#include "doctest.h"

#include "binpath/bat.hpp"
#include "binpath/errors.hpp"
#include "binpath/instance_gen.hpp"
#include "binpath/lex_weight.hpp"
#include "binpath/oracle.hpp"
#include "binpath/pathfind.hpp"

#include "fixtures.hpp"

#include <random>

using namespace binpath;

TEST_CASE("bat_next ripples from the lowest zero bit") {
    StateVector x = StateVector::from_string("00000");
    REQUIRE(bat_next(x));
    CHECK(x.to_string() == "10000");

    x = StateVector::from_string("11000");
    REQUIRE(bat_next(x));
    CHECK(x.to_string() == "00100");

    x = StateVector::from_string("11111");
    CHECK_FALSE(bat_next(x));
    CHECK(x.to_string() == "11111");
}

TEST_CASE("bat_enumerate(5) reproduces the full 32-vector sequence") {
    const auto seq = bat_enumerate(5);
    REQUIRE(seq.size() == 32);
    for (std::size_t i = 0; i < 32; ++i) CHECK(seq[i].to_string() == fixtures::kBatSequence5[i]);
}

TEST_CASE("enumeration position equals value plus one") {
    for (std::size_t k : {1, 3, 10}) {
        const auto seq = bat_enumerate(k);
        REQUIRE(seq.size() == std::size_t{1} << k);
        for (std::size_t p = 0; p < seq.size(); ++p)
            CHECK(vector_value(seq[p]) == LexWeight::from_u64(p));
    }
    CHECK(bat_enumerate(1)[0].to_string() == "0");
    CHECK(bat_enumerate(1)[1].to_string() == "1");
}

TEST_CASE("enumeration above the cap needs force") {
    CHECK_THROWS_AS(bat_enumerate(25), CapExceeded);
    CHECK_THROWS_AS(bat_enumerate(0), std::invalid_argument);
}

TEST_CASE("streaming enumeration matches the materialized one") {
    BatSequence seq(4);
    const auto all = bat_enumerate(4);
    for (const auto& expected : all) {
        const auto got = seq.next();
        REQUIRE(got.has_value());
        CHECK(*got == expected);
    }
    CHECK_FALSE(seq.next().has_value());
    CHECK_FALSE(seq.next().has_value());
}

TEST_CASE("the historical first-connected greedy reproduces its known outputs") {
    CHECK(find_xfc_paper(fixtures::benchmark()).to_string() == "01001001");
    CHECK(find_xfc_paper(fixtures::diamond()).to_string() == "0101");
    CHECK(find_xfc_paper(fixtures::single_edge()).to_string() == "1");
}

TEST_CASE("the corrected greedy finds the BAT-minimal connected vector") {
    CHECK(find_xfc_correct(fixtures::benchmark()).to_string() == "10100010");
    CHECK(find_xfc_correct(fixtures::diamond()).to_string() == "1010");
    CHECK(find_xfc_correct(fixtures::single_edge()).to_string() == "1");
}

TEST_CASE("divergence witness on the benchmark network") {
    const Network net = fixtures::benchmark();
    const StateVector paper = find_xfc_paper(net);
    const StateVector correct = find_xfc_correct(net);
    CHECK(paper != correct);
    CHECK(bat_precedes(correct, paper)); // the historical greedy overshoots
    CHECK(vector_value(correct) == LexWeight::from_u64(69));
    CHECK(vector_value(paper) == LexWeight::from_u64(146));
}

TEST_CASE("both greedy variants require a connectable network") {
    CHECK_THROWS_AS(find_xfc_paper(fixtures::two_components()), NoPathError);
    CHECK_THROWS_AS(find_xfc_correct(fixtures::two_components()), NoPathError);
}

TEST_CASE("greedy outputs are always connected; corrected one matches the oracle") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const Network net = random_instance(rng);
        const StateVector paper = find_xfc_paper(net);
        const StateVector correct = find_xfc_correct(net);
        CHECK(is_st_connected(net, paper));
        CHECK(is_st_connected(net, correct));

        const auto first = oracle_first_connected(net);
        REQUIRE(first.has_value());
        CHECK(correct == *first);
        CHECK(earliest_path(net)->vector == *first);
        // The historical greedy never undershoots the true first vector.
        if (paper != correct) CHECK(bat_precedes(correct, paper));
    }
}
