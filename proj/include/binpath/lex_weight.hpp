#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "binpath/state_vector.hpp"

namespace binpath {

// Exact unbounded-width natural number, or infinity, used as a Dijkstra
// distance. Arc weights are single powers of two, so path weights can exceed
// any machine word as soon as a network has more than 64 arcs; keeping the
// arithmetic exact is what makes path comparisons equivalent to BAT-order
// comparisons bit for bit.
//
// Representation: little-endian 64-bit words with no trailing zero words, so
// each value has exactly one form. Infinity is its own variant; it absorbs
// addition and compares greater than every finite value.
class LexWeight {
public:
    LexWeight() = default; // zero

    static LexWeight zero() { return LexWeight(); }
    static LexWeight infinity();
    static LexWeight power_of_two(std::size_t exponent);
    static LexWeight from_u64(std::uint64_t value);
    static LexWeight from_words(std::vector<std::uint64_t> words);

    bool is_infinite() const { return inf_; }
    bool is_zero() const { return !inf_ && words_.empty(); }

    // 0-based exponent test; finite values only.
    bool bit(std::size_t exponent) const;
    // Position of the highest set bit plus one; 0 for zero. Finite values only.
    std::size_t bit_length() const;

    // Requires a finite value with bit_length() <= 64.
    std::uint64_t to_u64() const;

    // Arbitrary-length decimal rendering; "inf" for infinity.
    std::string decimal() const;

    // '0'/'1' string, lowest bit first (same orientation as StateVector),
    // zero-padded on the right up to min_width. Finite values only.
    std::string bits_lsb_first(std::size_t min_width = 0) const;

    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const LexWeight&) const = default;

    // Total order: finite values as natural numbers, infinity strictly greatest.
    friend int compare(const LexWeight& a, const LexWeight& b);
    bool operator<(const LexWeight& o) const { return compare(*this, o) < 0; }
    bool operator>(const LexWeight& o) const { return compare(*this, o) > 0; }
    bool operator<=(const LexWeight& o) const { return compare(*this, o) <= 0; }
    bool operator>=(const LexWeight& o) const { return compare(*this, o) >= 0; }

    // Exact addition; infinity absorbs.
    friend LexWeight lex_add(const LexWeight& a, const LexWeight& b);
    LexWeight operator+(const LexWeight& o) const { return lex_add(*this, o); }

    // *this = base + 2^exponent, reusing existing capacity. base must be
    // finite and must not alias *this.
    void assign_sum_bit(const LexWeight& base, std::size_t exponent);

    // Orders (base + 2^exponent) against rhs without materializing the sum
    // when no carry is involved. base must be finite.
    static int compare_sum_bit(const LexWeight& base, std::size_t exponent, const LexWeight& rhs);

private:
    std::vector<std::uint64_t> words_; // little-endian, canonical
    bool inf_ = false;

    void trim();
};

int compare(const LexWeight& a, const LexWeight& b);
LexWeight lex_add(const LexWeight& a, const LexWeight& b);

// Power-of-two weight allocation over the m arcs of a network. The earliest
// scheme gives arc i the weight 2^(i-1); the latest scheme reverses the
// exponents to 2^(m-i).
enum class WeightKind { earliest, latest };

struct WeightScheme {
    WeightKind kind;
    int arc_count;

    // 0-based exponent of arc_id's weight. Throws std::out_of_range.
    std::size_t bit_exponent(int arc_id) const;
    LexWeight arc_weight(int arc_id) const { return LexWeight::power_of_two(bit_exponent(arc_id)); }
};

inline WeightScheme earliest_scheme(int arc_count) { return {WeightKind::earliest, arc_count}; }
inline WeightScheme latest_scheme(int arc_count) { return {WeightKind::latest, arc_count}; }

// Integer value of a state vector: sum of 2^(i-1) over working arcs. Equal to
// the vector's 0-based position in the BAT enumeration and to the earliest-
// scheme weight of its arc set.
LexWeight vector_value(const StateVector& x);

// The BAT order relation x << y: at the highest index where the vectors
// differ, x has 0 and y has 1. Throws std::invalid_argument on length
// mismatch.
bool bat_precedes(const StateVector& x, const StateVector& y);

} // namespace binpath
