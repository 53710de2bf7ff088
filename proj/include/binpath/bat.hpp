#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "binpath/network.hpp"
#include "binpath/state_vector.hpp"

namespace binpath {

// Exhaustive enumerations above this many bits require an explicit override.
inline constexpr std::size_t kEnumerationCap = 24;

// Advances x to its successor in BAT order: the lowest 0 bit is set and all
// bits below it are cleared (a ripple increment from arc 1). Returns false,
// leaving x untouched, when x is all-ones.
bool bat_next(StateVector& x);

// Streaming BAT enumeration, starting from the zero vector.
class BatSequence {
public:
    explicit BatSequence(std::size_t size) : current_(size) {}

    // The next vector in BAT order, or nullopt after all 2^size vectors.
    std::optional<StateVector> next();

private:
    StateVector current_;
    bool started_ = false;
    bool done_ = false;
};

// All 2^k state vectors in BAT order. k must be >= 1 and at most
// kEnumerationCap unless force is set (throws CapExceeded).
std::vector<StateVector> bat_enumerate(std::size_t k, bool force = false);

// The greedy first-connected-vector construction that scans arcs upward from
// a_1: bit j is tentatively dropped with every higher arc still working, and
// is kept exactly when dropping it disconnects source from sink. This is the
// historical construction; it overshoots on some topologies (see
// find_xfc_correct). Throws NoPathError when even the all-arcs graph is
// disconnected.
StateVector find_xfc_paper(const Network& net);

// Downward-scanning variant: bit j is tentatively dropped with every lower
// arc still working and higher bits already decided. The result is the
// BAT-minimal connected vector and coincides with the earliest path's
// indicator. Throws NoPathError when the all-arcs graph is disconnected.
StateVector find_xfc_correct(const Network& net);

} // namespace binpath
