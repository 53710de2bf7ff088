#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace binpath {

// Length-m bit sequence over the arcs of a network: bit i (1-based) tells
// whether arc a_i is working. Stored little-endian, arc 1 in the lowest bit,
// so the sequence read as an integer equals its position in BAT order.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    // Parses a '0'/'1' string, arc a_1 first. Throws std::invalid_argument.
    static StateVector from_string(std::string_view bits);

    // Bits of `value`, lowest bit = arc 1. Requires size <= 64 and value < 2^size.
    static StateVector from_value(std::uint64_t value, std::size_t size);

    std::size_t size() const { return size_; }

    // 1-based arc index.
    bool bit(std::size_t arc) const { return (words_[(arc - 1) / 64] >> ((arc - 1) % 64)) & 1u; }
    void set_bit(std::size_t arc, bool value);

    bool all_ones() const;
    bool any() const;
    std::size_t count() const;
    bool is_subset_of(const StateVector& other) const;

    // Requires size <= 64.
    std::uint64_t value_u64() const;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const StateVector&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace binpath
