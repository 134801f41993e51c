#include "petcheck/graph.hpp"

#include <algorithm>
#include <numeric>

namespace petcheck {

MultiGraph::MultiGraph(std::size_t n, std::string name) : name_(std::move(name))
{
    for (std::size_t i = 0; i < n; ++i)
        add_vertex();
}

VertexId MultiGraph::add_vertex()
{
    auto id = static_cast<VertexId>(vertex_alive_.size());
    add_vertex(id);
    return id;
}

void MultiGraph::add_vertex(VertexId id)
{
    if (id == kNoVertex)
        throw GraphError("invalid vertex id");
    if (id < vertex_alive_.size() && vertex_alive_[id])
        throw GraphError("duplicate vertex id " + std::to_string(id));
    if (id >= vertex_alive_.size()) {
        vertex_alive_.resize(id + 1, 0);
        incidence_.resize(id + 1);
    }
    vertex_alive_[id] = 1;
    vertices_.insert(std::upper_bound(vertices_.begin(), vertices_.end(), id), id);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v)
{
    auto id = static_cast<EdgeId>(edge_slots_.size());
    add_edge(id, u, v);
    return id;
}

void MultiGraph::add_edge(EdgeId id, VertexId u, VertexId v)
{
    require_vertex(u);
    require_vertex(v);
    if (id == kNoEdge)
        throw GraphError("invalid edge id");
    if (id < edge_slots_.size() && edge_alive_[id])
        throw GraphError("duplicate edge id " + std::to_string(id));
    if (id >= edge_slots_.size()) {
        edge_slots_.resize(id + 1);
        edge_alive_.resize(id + 1, 0);
    }
    edge_slots_[id] = Edge{id, u, v};
    edge_alive_[id] = 1;
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), id), id);
}

void MultiGraph::remove_edge(EdgeId e)
{
    if (!has_edge(e))
        throw GraphError("unknown edge id " + std::to_string(e));
    const Edge& ed = edge_slots_[e];
    for (VertexId x : {ed.u, ed.v}) {
        auto& inc = incidence_[x];
        auto it = std::find(inc.begin(), inc.end(), e);
        if (it != inc.end())
            inc.erase(it);
    }
    edge_alive_[e] = 0;
    edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), e));
}

void MultiGraph::remove_vertex(VertexId v)
{
    require_vertex(v);
    while (!incidence_[v].empty())
        remove_edge(incidence_[v].front());
    vertex_alive_[v] = 0;
    vertices_.erase(std::lower_bound(vertices_.begin(), vertices_.end(), v));
}

bool MultiGraph::has_vertex(VertexId v) const
{
    return v < vertex_alive_.size() && vertex_alive_[v];
}

bool MultiGraph::has_edge(EdgeId e) const
{
    return e < edge_alive_.size() && edge_alive_[e];
}

const Edge& MultiGraph::edge(EdgeId e) const
{
    if (!has_edge(e))
        throw GraphError("unknown edge id " + std::to_string(e));
    return edge_slots_[e];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const
{
    require_vertex(v);
    return incidence_[v];
}

std::size_t MultiGraph::multiplicity(VertexId u, VertexId v) const
{
    std::size_t count = 0;
    for (EdgeId e : incident(u)) {
        const Edge& ed = edge_slots_[e];
        if (ed.other(u) == v)
            ++count;
    }
    // A loop sits twice in the incidence list.
    return u == v ? count / 2 : count;
}

std::vector<VertexId> MultiGraph::neighbours(VertexId v) const
{
    std::vector<VertexId> out;
    for (EdgeId e : incident(v))
        out.push_back(edge_slots_[e].other(v));
    return out;
}

void MultiGraph::require_vertex(VertexId v) const
{
    if (!has_vertex(v))
        throw GraphError("unknown vertex id " + std::to_string(v));
}

bool operator==(const MultiGraph& a, const MultiGraph& b)
{
    if (a.vertices_ != b.vertices_ || a.edges_ != b.edges_)
        return false;
    for (EdgeId e : a.edges_) {
        const Edge& x = a.edge_slots_[e];
        const Edge& y = b.edge_slots_[e];
        bool same = (x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u);
        if (!same)
            return false;
    }
    return true;
}

MultiGraph graph_from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                            std::string name)
{
    MultiGraph g(n, std::move(name));
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

std::vector<std::size_t> degree_sequence(const MultiGraph& g)
{
    std::vector<std::size_t> out;
    out.reserve(g.order());
    for (VertexId v : g.vertices())
        out.push_back(g.degree(v));
    return out;
}

bool is_cubic(const MultiGraph& g)
{
    return std::all_of(g.vertices().begin(), g.vertices().end(),
                       [&](VertexId v) { return g.degree(v) == 3; });
}

std::size_t min_degree(const MultiGraph& g)
{
    std::size_t best = 0;
    bool first = true;
    for (VertexId v : g.vertices()) {
        best = first ? g.degree(v) : std::min(best, g.degree(v));
        first = false;
    }
    return best;
}

std::size_t max_degree(const MultiGraph& g)
{
    std::size_t best = 0;
    for (VertexId v : g.vertices())
        best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexId> component_labels(const MultiGraph& g)
{
    std::vector<VertexId> label(g.vertex_bound(), kNoVertex);
    std::vector<VertexId> stack;
    for (VertexId s : g.vertices()) {
        if (label[s] != kNoVertex)
            continue;
        label[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                VertexId y = g.edge(e).other(x);
                if (label[y] == kNoVertex) {
                    label[y] = s;
                    stack.push_back(y);
                }
            }
        }
    }
    return label;
}

std::size_t component_count(const MultiGraph& g)
{
    auto label = component_labels(g);
    std::size_t count = 0;
    for (VertexId v : g.vertices())
        count += label[v] == v;
    return count;
}

bool is_connected(const MultiGraph& g)
{
    return component_count(g) <= 1;
}

namespace {

// Iterative bridge finding by low-link; parallel edges are not bridges.
std::size_t count_bridges(const MultiGraph& g)
{
    const std::size_t bound = g.vertex_bound();
    std::vector<int> disc(bound, -1), low(bound, 0);
    std::size_t bridges = 0;
    int timer = 0;
    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };
    for (VertexId s : g.vertices()) {
        if (disc[s] >= 0)
            continue;
        std::vector<Frame> stack{{s, kNoEdge, 0}};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.via)
                    continue;
                VertexId w = g.edge(e).other(f.v);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[done.v]);
                    if (low[done.v] > disc[parent])
                        ++bridges;
                }
            }
        }
    }
    return bridges;
}

}  // namespace

bool is_two_edge_connected(const MultiGraph& g)
{
    return is_connected(g) && count_bridges(g) == 0;
}

MultiGraph compacted(const MultiGraph& g)
{
    std::vector<VertexId> index(g.vertex_bound(), kNoVertex);
    MultiGraph out(g.order(), g.name());
    VertexId next = 0;
    for (VertexId v : g.vertices())
        index[v] = next++;
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        out.add_edge(index[ed.u], index[ed.v]);
    }
    return out;
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e)
{
    MultiGraph out = g;
    out.remove_edge(e);
    return out;
}

MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> es)
{
    MultiGraph out = g;
    for (EdgeId e : es)
        out.remove_edge(e);
    return out;
}

MultiGraph delete_vertices(const MultiGraph& g, std::span<const VertexId> xs)
{
    for (VertexId v : xs)
        if (!g.has_vertex(v))
            throw GraphError("unknown vertex id " + std::to_string(v));
    MultiGraph out = g;
    for (VertexId v : xs)
        if (out.has_vertex(v))
            out.remove_vertex(v);
    return out;
}

MultiGraph induced(const MultiGraph& g, std::span<const VertexId> xs)
{
    std::vector<char> keep(g.vertex_bound(), 0);
    for (VertexId v : xs) {
        if (!g.has_vertex(v))
            throw GraphError("unknown vertex id " + std::to_string(v));
        keep[v] = 1;
    }
    std::vector<VertexId> drop;
    for (VertexId v : g.vertices())
        if (!keep[v])
            drop.push_back(v);
    return delete_vertices(g, drop);
}

MultiGraph contract_edge(const MultiGraph& g, EdgeId e)
{
    const Edge& ce = g.edge(e);
    if (ce.is_loop())
        throw GraphError("cannot contract loop " + std::to_string(e) + "; delete it instead");
    const VertexId keep = std::min(ce.u, ce.v);
    const VertexId gone = std::max(ce.u, ce.v);
    MultiGraph out;
    out.set_name(g.name());
    for (VertexId v : g.vertices())
        if (v != gone)
            out.add_vertex(v);
    for (EdgeId f : g.edges()) {
        if (f == e)
            continue;
        Edge ed = g.edge(f);
        if (ed.u == gone)
            ed.u = keep;
        if (ed.v == gone)
            ed.v = keep;
        out.add_edge(f, ed.u, ed.v);
    }
    return out;
}

namespace {

// Edge sequence of `trace` read starting from endpoint `from` of edge `ed`.
std::vector<EdgeId> oriented(const EdgeTrace& trace, const Edge& ed, VertexId from)
{
    std::vector<EdgeId> path = trace[ed.id];
    if (ed.u != from)
        std::reverse(path.begin(), path.end());
    return path;
}

EdgeTrace identity_trace(const MultiGraph& g)
{
    EdgeTrace trace(g.edge_bound());
    for (EdgeId e : g.edges())
        trace[e] = {e};
    return trace;
}

}  // namespace

MultiGraph suppress_degree_two(const MultiGraph& g, EdgeTrace* trace)
{
    MultiGraph out = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId x : std::vector<VertexId>(out.vertices())) {
            if (!out.has_vertex(x) || out.degree(x) != 2)
                continue;
            auto inc = out.incident(x);
            const Edge e1 = out.edge(inc[0]);
            const Edge e2 = out.edge(inc[1]);
            if (e1.id == e2.id) {
                // A vertex whose only incidences form one loop.
                out.remove_vertex(x);
                changed = true;
                continue;
            }
            const VertexId a = e1.other(x);
            const VertexId b = e2.other(x);
            std::vector<EdgeId> path;
            if (trace) {
                path = oriented(*trace, e1, a);
                auto rest = oriented(*trace, e2, x);
                path.insert(path.end(), rest.begin(), rest.end());
            }
            out.remove_vertex(x);
            const EdgeId keep = std::min(e1.id, e2.id);
            out.add_edge(keep, a, b);
            if (trace)
                (*trace)[keep] = std::move(path);
            changed = true;
        }
    }
    return out;
}

MultiGraph suppress_degree_two(const MultiGraph& g)
{
    return suppress_degree_two(g, nullptr);
}

ReducedGraph reduce_delete_traced(const MultiGraph& g, EdgeId e)
{
    EdgeTrace trace = identity_trace(g);
    MultiGraph h = delete_edge(g, e);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : std::vector<VertexId>(h.vertices())) {
            if (h.has_vertex(v) && h.degree(v) <= 1) {
                h.remove_vertex(v);
                changed = true;
            }
        }
    }
    h = suppress_degree_two(h, &trace);
    EdgeTrace kept(h.edge_bound());
    for (EdgeId f : h.edges())
        kept[f] = std::move(trace[f]);
    return {std::move(h), std::move(kept)};
}

MultiGraph reduce_delete(const MultiGraph& g, EdgeId e)
{
    return reduce_delete_traced(g, e).graph;
}

VertexId subdivide_edge(MultiGraph& g, EdgeId e)
{
    const Edge ed = g.edge(e);
    g.remove_edge(e);
    VertexId w = g.add_vertex();
    g.add_edge(e, ed.u, w);
    g.add_edge(ed.v, w);
    return w;
}

}  // namespace petcheck
