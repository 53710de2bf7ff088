#pragma once

#include <array>
#include <string_view>

#include "binpath/network.hpp"

namespace fixtures {

// 6-node, 8-arc benchmark network: source 1, sink 6.
// a1=1-2 a2=1-3 a3=2-4 a4=2-5 a5=3-5 a6=4-5 a7=4-6 a8=5-6
inline constexpr std::string_view kBenchmark =
    "6 8 1 6\n"
    "1 2\n"
    "1 3\n"
    "2 4\n"
    "2 5\n"
    "3 5\n"
    "4 5\n"
    "4 6\n"
    "5 6\n";

// Two parallel branches 1-2-4 and 1-3-4.
inline constexpr std::string_view kDiamond =
    "4 4 1 4\n"
    "1 2\n"
    "1 3\n"
    "2 4\n"
    "3 4\n";

inline constexpr std::string_view kSingleEdge = "2 1 1 2\n1 2\n";

// Source and sink in different components.
inline constexpr std::string_view kTwoComponents = "4 2 1 4\n1 2\n3 4\n";

inline binpath::Network benchmark() { return binpath::Network::parse(kBenchmark); }
inline binpath::Network diamond() { return binpath::Network::parse(kDiamond); }
inline binpath::Network single_edge() { return binpath::Network::parse(kSingleEdge); }
inline binpath::Network two_components() { return binpath::Network::parse(kTwoComponents); }

// The full 5-bit BAT sequence (arc a_1 first), position p holding value p-1.
inline constexpr std::array<std::string_view, 32> kBatSequence5 = {
    "00000", "10000", "01000", "11000", "00100", "10100", "01100", "11100",
    "00010", "10010", "01010", "11010", "00110", "10110", "01110", "11110",
    "00001", "10001", "01001", "11001", "00101", "10101", "01101", "11101",
    "00011", "10011", "01011", "11011", "00111", "10111", "01111", "11111",
};

} // namespace fixtures
