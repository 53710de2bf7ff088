#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binpath/errors.hpp"
#include "binpath/state_vector.hpp"

namespace binpath {

struct Arc {
    int id; // 1-based, dense
    int u;
    int v;

    bool operator==(const Arc&) const = default;
};

// Immutable undirected binary-state network with a designated source and
// sink. Nodes are 1-based; arc ids follow input order. No self-loops, no
// parallel arcs.
class Network {
public:
    // Direct construction from endpoint pairs (arc k = endpoints[k-1]).
    // probs may be empty (all arcs default to 1.0) or one entry per arc.
    // Throws std::invalid_argument on any structural violation.
    Network(int node_count, const std::vector<std::pair<int, int>>& endpoints,
            int source, int sink, std::vector<double> probs = {});

    // Edge-list text format:
    //   line 1: `n m s t`
    //   next m lines: `u v [p]` with p in [0,1] (default 1.0)
    // Lines whose first non-blank character is '#' are comments; blank lines
    // are ignored. Throws ParseError with the offending 1-based line number.
    static Network parse(std::string_view text);
    static Network parse_file(const std::string& path);

    int node_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }

    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int id) const { return arcs_[id - 1]; }
    double arc_prob(int id) const { return probs_[id - 1]; }
    const std::vector<double>& arc_probs() const { return probs_; }

    struct Neighbor {
        int node;
        int arc;
    };
    std::span<const Neighbor> neighbors(int node) const {
        return {adj_.data() + adj_offset_[node], adj_.data() + adj_offset_[node + 1]};
    }

    // Diagnostics, not errors: reports isolated nodes and an all-arcs-working
    // graph that fails to connect source to sink.
    std::vector<std::string> validate() const;

    // Canonical edge-list form; parse(to_edge_list()) reproduces the network.
    std::string to_edge_list() const;

private:
    int n_;
    int source_;
    int sink_;
    std::vector<Arc> arcs_;
    std::vector<double> probs_;
    std::vector<Neighbor> adj_; // CSR layout
    std::vector<int> adj_offset_;

    void build_adjacency();
};

namespace detail {

// Breadth-first source-sink reachability over the arcs selected by
// working(arc_id).
template <class ArcPred>
bool st_connected_when(const Network& net, ArcPred&& working) {
    if (net.source() == net.sink()) return true;
    std::vector<char> seen(static_cast<std::size_t>(net.node_count()) + 1, 0);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(net.node_count()));
    seen[net.source()] = 1;
    queue.push_back(net.source());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& nb : net.neighbors(queue[head])) {
            if (seen[nb.node] || !working(nb.arc)) continue;
            if (nb.node == net.sink()) return true;
            seen[nb.node] = 1;
            queue.push_back(nb.node);
        }
    }
    return false;
}

} // namespace detail

// True iff the subgraph of working arcs connects source to sink. Throws
// std::invalid_argument when |x| != m.
bool is_st_connected(const Network& net, const StateVector& x);

// Mask variant for exhaustive scans; bit i-1 of arc_mask selects arc i.
// Requires m <= 64.
bool is_st_connected(const Network& net, std::uint64_t arc_mask);

} // namespace binpath
