#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace binpath {

// One cross-checked property, aggregated over all generated instances.
// Mandatory checks are invariants of the implementation; non-mandatory ones
// track the two after-latest folklore claims, which fail on real networks
// and are reported rather than enforced.
struct VerifyCheck {
    std::string name;
    bool mandatory = true;
    std::uint64_t checked = 0;    // instances examined
    std::uint64_t violations = 0; // instances where the property failed

    bool passed() const { return violations == 0; }
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::vector<VerifyCheck> checks;

    bool mandatory_passed() const;
};

// Runs the full invariant suite against `cases` seeded random connected
// instances, comparing the Dijkstra paths, greedy constructions, and pruned
// reliability against exhaustive enumeration.
VerifyReport run_verify(std::uint64_t seed, std::uint64_t cases);

} // namespace binpath
