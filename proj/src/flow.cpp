#include "petcheck/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace petcheck {

FlowNetwork::FlowNetwork(std::size_t nodes) : head_(nodes) {}

std::size_t FlowNetwork::add_node()
{
    head_.emplace_back();
    return head_.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity)
{
    std::size_t idx = arcs_.size();
    arcs_.push_back({to, capacity, 0});
    head_[from].push_back(idx);
    arcs_.push_back({from, 0, 0});
    head_[to].push_back(idx + 1);
    return idx;
}

std::int64_t FlowNetwork::max_flow(std::size_t s, std::size_t t, std::int64_t limit)
{
    std::int64_t total = 0;
    std::vector<std::size_t> via(head_.size());
    while (total < limit) {
        std::fill(via.begin(), via.end(), std::numeric_limits<std::size_t>::max());
        std::deque<std::size_t> queue{s};
        std::vector<char> seen(head_.size(), 0);
        seen[s] = 1;
        while (!queue.empty() && !seen[t]) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t a : head_[x]) {
                const Arc& arc = arcs_[a];
                if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
                    seen[arc.to] = 1;
                    via[arc.to] = a;
                    queue.push_back(arc.to);
                }
            }
        }
        if (!seen[t])
            break;
        std::int64_t push = limit - total;
        for (std::size_t x = t; x != s; x = arcs_[via[x] ^ 1].to)
            push = std::min(push, arcs_[via[x]].capacity - arcs_[via[x]].flow);
        for (std::size_t x = t; x != s; x = arcs_[via[x] ^ 1].to) {
            arcs_[via[x]].flow += push;
            arcs_[via[x] ^ 1].flow -= push;
        }
        total += push;
    }
    return total;
}

std::int64_t FlowNetwork::flow_on(std::size_t arc) const
{
    return arcs_[arc].flow;
}

std::vector<char> FlowNetwork::source_side(std::size_t s) const
{
    std::vector<char> seen(head_.size(), 0);
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t a : head_[x]) {
            const Arc& arc = arcs_[a];
            if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
                seen[arc.to] = 1;
                queue.push_back(arc.to);
            }
        }
    }
    return seen;
}

}  // namespace petcheck
