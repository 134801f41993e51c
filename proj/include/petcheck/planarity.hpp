#pragma once

#include "petcheck/graph.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace petcheck {

/// One end of an edge: `side` 0 is the `u` end, 1 the `v` end.
struct EdgeEnd {
    EdgeId edge = kNoEdge;
    int side = 0;

    friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Combinatorial embedding: the cyclic order of edge ends around each vertex.
/// Faces are traced by leaving along an end and continuing with the successor
/// of the arriving end in the rotation at the far vertex.
struct Embedding {
    /// Indexed by vertex id; empty for absent or isolated vertices.
    std::vector<std::vector<EdgeEnd>> rotation;
    /// Index into faces(g, *this) of the face designated as unbounded.
    std::optional<std::size_t> outer_face;
};

/// A closed boundary walk: `edges[i]` leads from `vertices[i]` to `vertices[i + 1]`.
struct Face {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
    /// True when the walk repeats no vertex (the face is bounded by a circuit).
    bool is_circuit() const;
};

/// A planar rotation system for g, or nullopt when g is not planar.
std::optional<Embedding> planar_embedding(const MultiGraph& g);
bool is_planar(const MultiGraph& g);

/// Traces all faces. Throws GraphError if the rotation is not a permutation of
/// the incidences of g or the result violates Euler's formula
/// (V - E + F + isolated = 2 * components).
std::vector<Face> faces(const MultiGraph& g, const Embedding& emb);

/// Faces bounded by a circuit of length five.
std::size_t pentagonal_face_count(const MultiGraph& g, const Embedding& emb);

/// A vertex whose deletion leaves a planar graph; the least id when g itself is planar.
std::optional<VertexId> is_apex(const MultiGraph& g);

struct PentagonBound {
    std::size_t count = 0;
    bool holds = false;
};

/// Pentagon count of a cubic apex graph of girth >= 5 and whether it is >= 6.
/// Throws GraphError when the graph is not cubic, has girth < 5 or is not apex.
PentagonBound apex_pentagon_bound(const MultiGraph& g);

/// Four deleted edges e1..e4 (e_i = u_i v_i) and a planar embedding of the
/// remainder whose outer face is a circuit visiting u1 u2 v1 v2 u3 u4 v3 v4 in order.
struct DoublecrossWitness {
    std::array<EdgeId, 4> removed{};
    Embedding embedding;
    /// Vertex sequence of the outer circuit.
    std::vector<VertexId> outer_circuit;
    /// u1, u2, v1, v2, u3, u4, v3, v4.
    std::array<VertexId, 8> order{};
};

/// Largest edge count accepted by the exhaustive doublecross search.
inline constexpr std::size_t kDoublecrossMaxEdges = 60;

enum class CrossingOrder {
    /// Read the outer circuit in one direction only (rotations).
    strict,
    /// Also read it in the reverse direction (rotations and reflections).
    permissive,
};

/// True when terminal labels read cyclically match x y x y z w z w for some
/// assignment of the four edges; `labels` holds the edge index (0..3) of each
/// terminal in circuit order. On success fills `start` with the rotation offset
/// and `reversed` with the reading direction.
bool matches_crossing_pattern(const std::array<int, 8>& labels, CrossingOrder mode, std::size_t* start = nullptr,
                              bool* reversed = nullptr);

/// Exhaustive search over 4-edge subsets in increasing edge-id order; the first
/// witness found is returned. Throws BoundExceeded above kDoublecrossMaxEdges.
std::optional<DoublecrossWitness> is_doublecross(const MultiGraph& g,
                                                 CrossingOrder mode = CrossingOrder::permissive);

/// Replays a witness against the definition.
bool verify_doublecross(const MultiGraph& g, const DoublecrossWitness& w);

/// Pentagon count of a cubic doublecross graph of girth >= 5 and whether it is >= 6.
PentagonBound doublecross_pentagon_bound(const MultiGraph& g);

}  // namespace petcheck
