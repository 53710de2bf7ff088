#include "binpath/bat.hpp"

#include "binpath/errors.hpp"

#include <stdexcept>

namespace binpath {

bool bat_next(StateVector& x) {
    if (x.all_ones()) return false;
    // Ripple increment from arc 1: the lowest 0 becomes 1, everything below
    // is cleared.
    for (std::size_t i = 1; i <= x.size(); ++i) {
        if (!x.bit(i)) {
            x.set_bit(i, true);
            return true;
        }
        x.set_bit(i, false);
    }
    return true; // unreachable: all_ones() handled above
}

std::optional<StateVector> BatSequence::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return current_;
    }
    if (!bat_next(current_)) {
        done_ = true;
        return std::nullopt;
    }
    return current_;
}

std::vector<StateVector> bat_enumerate(std::size_t k, bool force) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k > kEnumerationCap && !force)
        throw CapExceeded("enumeration of 2^" + std::to_string(k) +
                          " vectors exceeds the cap of 2^" + std::to_string(kEnumerationCap) +
                          " (use force to override)");
    std::vector<StateVector> out;
    if (k < 64) out.reserve(std::size_t{1} << k);
    BatSequence seq(k);
    while (auto x = seq.next()) out.push_back(std::move(*x));
    return out;
}

namespace {

void require_connected_when_all_working(const Network& net) {
    if (!detail::st_connected_when(net, [](int) { return true; }))
        throw NoPathError("network is source-sink disconnected even with all arcs working");
}

} // namespace

StateVector find_xfc_paper(const Network& net) {
    require_connected_when_all_working(net);
    const int m = net.arc_count();
    StateVector fixed(m);
    for (int j = 1; j <= m; ++j) {
        // Arcs below j keep their decided state, arc j is tentatively failed,
        // everything above j is working.
        const bool ok = detail::st_connected_when(
            net, [&](int a) { return a < j ? fixed.bit(a) : a != j; });
        if (!ok) fixed.set_bit(j, true);
    }
    return fixed;
}

StateVector find_xfc_correct(const Network& net) {
    require_connected_when_all_working(net);
    const int m = net.arc_count();
    StateVector fixed(m);
    for (int j = m; j >= 1; --j) {
        // Arcs above j keep their decided state, arc j is tentatively failed,
        // everything below j is working.
        const bool ok = detail::st_connected_when(
            net, [&](int a) { return a > j ? fixed.bit(a) : a != j; });
        if (!ok) fixed.set_bit(j, true);
    }
    return fixed;
}

} // namespace binpath
