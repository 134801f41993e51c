#pragma once

#include "petcheck/circuits.hpp"
#include "petcheck/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace petcheck {

/// A vertex set X and its boundary δ(X): edges with exactly one end in X.
struct Cut {
    std::vector<VertexId> side;      // sorted
    std::vector<EdgeId> boundary;    // sorted
};

/// A vertex set with at most five boundary edges whose two sides each induce
/// at least two circuits.
struct Shore {
    Cut cut;
};

/// Largest order handled by the exact small-cut enumeration.
inline constexpr std::size_t kCutSearchMaxOrder = 64;
/// Largest order for which theta-connectivity is decided by plain subset enumeration.
inline constexpr std::size_t kDirectThetaMaxOrder = 20;

Cut edge_cut(const MultiGraph& g, const std::vector<VertexId>& xs);

/// |E| - |V| + number of components.
std::size_t cyclomatic_number(const MultiGraph& g);

/// True iff g has at least two distinct circuits (cyclomatic number >= 2).
bool circuit_count_at_least_two(const MultiGraph& g);

/// Visits every vertex set X with |δ(X)| <= max_boundary. Vertex sets are
/// passed as sorted id lists. Exact; throws BoundExceeded above kCutSearchMaxOrder.
void for_each_small_cut(const MultiGraph& g, std::size_t max_boundary,
                        const std::function<void(const Cut&)>& visit);

/// Shore predicate replayed from the definition.
bool is_shore(const MultiGraph& g, const std::vector<VertexId>& xs, std::size_t max_boundary = 5);

/// A shore minimising |δ|, ties broken by the lexicographically least vertex
/// list; nullopt when none exists.
std::optional<Shore> find_shore(const MultiGraph& g, std::size_t max_boundary = 5);

/// Every shore of g in the search order (used by shore selection rules).
std::vector<Shore> all_shores(const MultiGraph& g, std::size_t max_boundary = 5);

/// Cubic, girth >= 5, and |δ(X)| >= 6 whenever both sides have >= 7 vertices.
/// Uses plain subset enumeration up to kDirectThetaMaxOrder vertices and the
/// shore characterisation beyond.
bool is_theta_connected(const MultiGraph& g);
/// Definition checked over all vertex subsets; throws BoundExceeded above kDirectThetaMaxOrder.
bool theta_connected_direct(const MultiGraph& g);
/// Girth >= 5 and no shore.
bool theta_connected_via_shores(const MultiGraph& g);

/// Among shores of minimum |δ|, one minimising its intersection with the
/// breaker `c`, then lexicographically least. Requires g interesting and c a
/// breaker of g; nullopt when g has no shore.
std::optional<Shore> push_shore(const MultiGraph& g, const Circuit& c);

}  // namespace petcheck
