#pragma once

#include "petcheck/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace petcheck {

/// A closed walk without repeated vertices.
///
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % length()]`. Stored
/// canonically: rotated to start at the least vertex id; of the two
/// directions, the one whose second vertex is smaller (for a 2-circuit, the
/// one whose first edge id is smaller).
struct Circuit {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;

    std::size_t length() const { return edges.size(); }
    bool contains_vertex(VertexId v) const;
    bool contains_edge(EdgeId e) const;
    /// Sorted edge ids; a circuit is determined by its edge set.
    std::vector<EdgeId> edge_set() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;
    friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

/// Puts a vertex/edge cycle into canonical form.
Circuit canonical_circuit(std::vector<VertexId> vertices, std::vector<EdgeId> edges);

/// Builds a circuit of g through the listed vertices (consecutive ones must be
/// adjacent; the least edge id is taken between them). Throws otherwise.
Circuit circuit_through(const MultiGraph& g, const std::vector<VertexId>& vertices);

/// Checks that c is a circuit of g: edges exist, join consecutive vertices, no repeats.
bool is_valid_circuit(const MultiGraph& g, const Circuit& c);

/// Shortest circuit length; nullopt stands for infinity (a forest).
std::optional<std::size_t> girth(const MultiGraph& g);

/// Every circuit of length at most max_length, each once, sorted by
/// (length, vertices, edges).
std::vector<Circuit> circuits_up_to(const MultiGraph& g, std::size_t max_length);

/// Circuits of length at most five.
std::vector<Circuit> short_circuits(const MultiGraph& g);

/// Circuits of length exactly five.
std::vector<Circuit> pentagons(const MultiGraph& g);
std::size_t pentagon_count(const MultiGraph& g);

/// True when the two circuits share a vertex.
bool meets(const Circuit& a, const Circuit& b);

/// Short circuits meeting every short circuit of g.
std::vector<Circuit> find_breakers(const MultiGraph& g);

/// Cubic, at least ten vertices, and girth at least six or a breaker.
bool is_interesting(const MultiGraph& g);

}  // namespace petcheck
