#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace petcheck {

/// Integer-capacity max-flow by shortest augmenting paths (Edmonds-Karp).
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes);

    std::size_t add_node();
    /// Adds a directed arc; returns its index. Use two arcs for an undirected edge.
    std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

    /// Pushes flow from s to t, stopping once `limit` is reached.
    std::int64_t max_flow(std::size_t s, std::size_t t, std::int64_t limit = INT64_MAX);

    std::int64_t flow_on(std::size_t arc) const;
    /// Nodes reachable from s in the residual network after max_flow.
    std::vector<char> source_side(std::size_t s) const;

    std::size_t node_count() const { return head_.size(); }
    std::size_t arc_head(std::size_t arc) const { return arcs_[arc].to; }

private:
    struct Arc {
        std::size_t to;
        std::int64_t capacity;
        std::int64_t flow;
    };
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> head_;
};

}  // namespace petcheck
