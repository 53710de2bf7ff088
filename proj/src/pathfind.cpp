#include "binpath/pathfind.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace binpath {

namespace {

// Binary min-heap of node ids keyed by an external distance array, with
// decrease-key. Ties between equal keys (only possible while both are
// infinite) break toward the lower node index, so extraction order is
// deterministic.
class NodeHeap {
public:
    explicit NodeHeap(int node_count, const std::vector<LexWeight>& dist)
        : dist_(dist), pos_(static_cast<std::size_t>(node_count) + 1, kAbsent) {
        heap_.reserve(node_count);
    }

    bool empty() const { return heap_.empty(); }

    void insert_or_decrease(int v) {
        if (pos_[v] == kAbsent) {
            pos_[v] = static_cast<int>(heap_.size());
            heap_.push_back(v);
        }
        sift_up(pos_[v]);
    }

    int pop() {
        const int top = heap_.front();
        pos_[top] = kAbsent;
        heap_.front() = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            pos_[heap_.front()] = 0;
            sift_down(0);
        }
        return top;
    }

private:
    static constexpr int kAbsent = -1;

    bool less(int a, int b) const {
        const int c = compare(dist_[a], dist_[b]);
        return c != 0 ? c < 0 : a < b;
    }

    void sift_up(int i) {
        while (i > 0) {
            const int parent = (i - 1) / 2;
            if (!less(heap_[i], heap_[parent])) break;
            std::swap(heap_[i], heap_[parent]);
            pos_[heap_[i]] = i;
            pos_[heap_[parent]] = parent;
            i = parent;
        }
    }

    void sift_down(int i) {
        const int n = static_cast<int>(heap_.size());
        for (;;) {
            int best = i;
            const int l = 2 * i + 1, r = 2 * i + 2;
            if (l < n && less(heap_[l], heap_[best])) best = l;
            if (r < n && less(heap_[r], heap_[best])) best = r;
            if (best == i) return;
            std::swap(heap_[i], heap_[best]);
            pos_[heap_[i]] = i;
            pos_[heap_[best]] = best;
            i = best;
        }
    }

    const std::vector<LexWeight>& dist_;
    std::vector<int> heap_;
    std::vector<int> pos_;
};

} // namespace

std::optional<PathResult> binary_dijkstra(const Network& net, const WeightScheme& scheme) {
    if (scheme.arc_count != net.arc_count())
        throw std::invalid_argument("weight scheme arc count does not match network");

    const int n = net.node_count();
    std::vector<LexWeight> dist(static_cast<std::size_t>(n) + 1, LexWeight::infinity());
    std::vector<int> prev_node(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> prev_arc(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> settled(static_cast<std::size_t>(n) + 1, 0);

    dist[net.source()] = LexWeight::zero();
    NodeHeap heap(n, dist);
    heap.insert_or_decrease(net.source());

    bool reached_sink = false;
#ifndef NDEBUG
    LexWeight last_settled;
    bool have_settled = false;
#endif
    while (!heap.empty()) {
        const int u = heap.pop();
        settled[u] = 1;
#ifndef NDEBUG
        // Distinct arc subsets have distinct power-of-two sums, so settled
        // distances are strictly increasing.
        assert(!have_settled || compare(dist[u], last_settled) > 0);
        last_settled = dist[u];
        have_settled = true;
#endif
        if (u == net.sink()) {
            reached_sink = true;
            break;
        }
        for (const auto& nb : net.neighbors(u)) {
            if (settled[nb.node]) continue;
            const std::size_t exponent = scheme.bit_exponent(nb.arc);
            if (LexWeight::compare_sum_bit(dist[u], exponent, dist[nb.node]) < 0) {
                dist[nb.node].assign_sum_bit(dist[u], exponent);
                prev_node[nb.node] = u;
                prev_arc[nb.node] = nb.arc;
                heap.insert_or_decrease(nb.node);
            }
        }
    }
    if (!reached_sink) return std::nullopt;

    PathResult result;
    result.weight = dist[net.sink()];
    for (int cur = net.sink(); cur != 0; cur = prev_node[cur]) result.nodes.push_back(cur);
    std::reverse(result.nodes.begin(), result.nodes.end());
    result.vector = StateVector(net.arc_count());
    result.arc_ids.reserve(result.nodes.size() - 1);
    for (std::size_t i = 1; i < result.nodes.size(); ++i) {
        const int arc = prev_arc[result.nodes[i]];
        result.arc_ids.push_back(arc);
        result.vector.set_bit(arc, true);
    }
    return result;
}

std::optional<PathResult> earliest_path(const Network& net) {
    return binary_dijkstra(net, earliest_scheme(net.arc_count()));
}

std::optional<PathResult> latest_path(const Network& net) {
    return binary_dijkstra(net, latest_scheme(net.arc_count()));
}

} // namespace binpath
