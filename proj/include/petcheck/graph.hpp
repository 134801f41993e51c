#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace petcheck {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Raised for malformed input or violated operation preconditions.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact search was asked to run past its documented size bound.
class BoundExceeded : public GraphError {
public:
    using GraphError::GraphError;
};

struct Edge {
    EdgeId id = kNoEdge;
    VertexId u = kNoVertex;
    VertexId v = kNoVertex;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool has_end(VertexId x) const { return x == u || x == v; }
};

/// Finite multigraph with loops and parallel edges.
///
/// Vertex and edge ids are stable: deleting an element never renumbers the
/// others, so witnesses computed on a graph stay meaningful for the graphs
/// derived from it. A loop is listed twice in its vertex's incidence list,
/// which makes `degree()` count it twice.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(std::size_t n, std::string name = {});

    VertexId add_vertex();
    /// Adds a vertex with an explicit id; throws if the id is taken.
    void add_vertex(VertexId id);
    EdgeId add_edge(VertexId u, VertexId v);
    /// Adds an edge with an explicit id; throws if the id is taken.
    void add_edge(EdgeId id, VertexId u, VertexId v);

    void remove_edge(EdgeId e);
    /// Removes the vertex and every incident edge.
    void remove_vertex(VertexId v);

    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    /// Sorted ascending.
    const std::vector<VertexId>& vertices() const { return vertices_; }
    /// Sorted ascending.
    const std::vector<EdgeId>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const;
    bool has_edge(EdgeId e) const;
    const Edge& edge(EdgeId e) const;

    /// Incident edge ids; a loop appears twice.
    std::span<const EdgeId> incident(VertexId v) const;
    std::size_t degree(VertexId v) const { return incident(v).size(); }

    /// One past the largest vertex id ever allocated; use to size id-indexed arrays.
    std::size_t vertex_bound() const { return vertex_alive_.size(); }
    std::size_t edge_bound() const { return edge_slots_.size(); }

    /// Number of edges joining u and v (loops when u == v).
    std::size_t multiplicity(VertexId u, VertexId v) const;
    /// Neighbours in incidence order, with repetition for parallel edges.
    std::vector<VertexId> neighbours(VertexId v) const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Same vertex ids, edge ids and endpoints.
    friend bool operator==(const MultiGraph& a, const MultiGraph& b);

private:
    void require_vertex(VertexId v) const;

    std::vector<char> vertex_alive_;
    std::vector<Edge> edge_slots_;
    std::vector<char> edge_alive_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<VertexId> vertices_;
    std::vector<EdgeId> edges_;
    std::string name_;
};

/// A graph together with where it came from.
struct GraphRecord {
    MultiGraph graph;
    std::string source;
};

/// Builds a graph on vertices 0..n-1 from an endpoint list; edge ids follow list order.
MultiGraph graph_from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                            std::string name = {});

std::vector<std::size_t> degree_sequence(const MultiGraph& g);
bool is_cubic(const MultiGraph& g);
std::size_t min_degree(const MultiGraph& g);
std::size_t max_degree(const MultiGraph& g);
std::size_t component_count(const MultiGraph& g);
bool is_connected(const MultiGraph& g);
/// Edge connectivity at least two: connected and bridgeless.
bool is_two_edge_connected(const MultiGraph& g);
/// Connected-component label per vertex id (kNoVertex for absent ids).
std::vector<VertexId> component_labels(const MultiGraph& g);

/// Relabels vertices to 0..n-1 in id order and edges to 0..m-1 in id order.
MultiGraph compacted(const MultiGraph& g);

// Editing operations. Each returns a new graph and keeps surviving ids.

MultiGraph delete_edge(const MultiGraph& g, EdgeId e);
MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> es);
MultiGraph delete_vertices(const MultiGraph& g, std::span<const VertexId> xs);
/// G|X: the subgraph induced by xs.
MultiGraph induced(const MultiGraph& g, std::span<const VertexId> xs);
/// Merges the ends of a non-loop edge into its smaller endpoint id; other
/// edges between the two ends become loops.
MultiGraph contract_edge(const MultiGraph& g, EdgeId e);

/// For every edge of a derived graph, the sequence of edges of the original
/// graph it stands for (a single edge when untouched).
using EdgeTrace = std::vector<std::vector<EdgeId>>;

/// Edge-traced variant of suppress_degree_two; `trace` is indexed by edge id
/// of the input on entry and of the output on return.
MultiGraph suppress_degree_two(const MultiGraph& g, EdgeTrace* trace);
/// Replaces each degree-2 vertex by an edge joining its neighbours until none
/// remain. A degree-2 vertex carrying only a loop is removed.
MultiGraph suppress_degree_two(const MultiGraph& g);

struct ReducedGraph {
    MultiGraph graph;
    /// Indexed by edge id of `graph`: the path of original edges it replaces.
    EdgeTrace trace;
};

/// Deletes e, then vertices of degree at most one (repeatedly), then
/// suppresses degree-2 vertices.
ReducedGraph reduce_delete_traced(const MultiGraph& g, EdgeId e);
MultiGraph reduce_delete(const MultiGraph& g, EdgeId e);

/// Subdivides edge e with a new vertex; returns the new vertex id.
VertexId subdivide_edge(MultiGraph& g, EdgeId e);

}  // namespace petcheck
