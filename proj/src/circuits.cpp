#include "petcheck/circuits.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace petcheck {

bool Circuit::contains_vertex(VertexId v) const
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Circuit::contains_edge(EdgeId e) const
{
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::vector<EdgeId> Circuit::edge_set() const
{
    std::vector<EdgeId> out = edges;
    std::sort(out.begin(), out.end());
    return out;
}

Circuit canonical_circuit(std::vector<VertexId> vertices, std::vector<EdgeId> edges)
{
    const std::size_t n = vertices.size();
    if (n == 0 || edges.size() != n)
        throw GraphError("malformed circuit");
    auto start = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    std::rotate(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(start), vertices.end());
    std::rotate(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(start), edges.end());
    bool flip = false;
    if (n >= 3)
        flip = vertices[n - 1] < vertices[1];
    else if (n == 2)
        flip = edges[1] < edges[0];
    if (flip) {
        // Reverse direction keeping vertices[0] first: v0 v_{n-1} ... v1.
        std::reverse(vertices.begin() + 1, vertices.end());
        std::reverse(edges.begin(), edges.end());
    }
    return Circuit{std::move(edges), std::move(vertices)};
}

Circuit circuit_through(const MultiGraph& g, const std::vector<VertexId>& vertices)
{
    const std::size_t n = vertices.size();
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i < n; ++i) {
        VertexId a = vertices[i], b = vertices[(i + 1) % n];
        EdgeId best = kNoEdge;
        for (EdgeId e : g.incident(a)) {
            if (g.edge(e).other(a) != b)
                continue;
            if (n == 2 && !edges.empty() && e == edges.front())
                continue;
            best = std::min(best, e);
        }
        if (best == kNoEdge)
            throw GraphError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
        edges.push_back(best);
    }
    Circuit c = canonical_circuit(vertices, edges);
    if (!is_valid_circuit(g, c))
        throw GraphError("vertex sequence is not a circuit");
    return c;
}

bool is_valid_circuit(const MultiGraph& g, const Circuit& c)
{
    const std::size_t n = c.length();
    if (n == 0 || c.vertices.size() != n)
        return false;
    std::vector<VertexId> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    std::vector<EdgeId> es = c.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.has_edge(c.edges[i]))
            return false;
        const Edge& ed = g.edge(c.edges[i]);
        VertexId a = c.vertices[i], b = c.vertices[(i + 1) % n];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
            return false;
    }
    return true;
}

std::optional<std::size_t> girth(const MultiGraph& g)
{
    for (EdgeId e : g.edges())
        if (g.edge(e).is_loop())
            return 1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::size_t bound = g.vertex_bound();
    std::vector<std::size_t> dist(bound);
    std::vector<EdgeId> via(bound);
    std::vector<char> seen(bound);
    std::deque<VertexId> queue;
    for (VertexId r : g.vertices()) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        seen[r] = 1;
        dist[r] = 0;
        via[r] = kNoEdge;
        queue.push_back(r);
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            if (2 * dist[x] >= best)
                break;
            for (EdgeId e : g.incident(x)) {
                if (e == via[x])
                    continue;
                VertexId y = g.edge(e).other(x);
                if (!seen[y]) {
                    seen[y] = 1;
                    dist[y] = dist[x] + 1;
                    via[y] = e;
                    queue.push_back(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<std::size_t>::max())
        return std::nullopt;
    return best;
}

namespace {

struct CircuitSearch {
    const MultiGraph& g;
    std::size_t max_length;
    VertexId anchor = 0;
    std::vector<char> on_path;
    std::vector<VertexId> path_vertices;
    std::vector<EdgeId> path_edges;
    std::vector<Circuit> found;

    void extend(VertexId x)
    {
        for (EdgeId e : g.incident(x)) {
            const Edge& ed = g.edge(e);
            if (ed.is_loop())
                continue;
            if (!path_edges.empty() && e == path_edges.back())
                continue;
            VertexId y = ed.other(x);
            if (y == anchor) {
                // Closing edge; the first-edge < closing-edge rule keeps one direction.
                if (!path_edges.empty() && path_edges.front() < e) {
                    auto edges = path_edges;
                    edges.push_back(e);
                    found.push_back(canonical_circuit(path_vertices, std::move(edges)));
                }
                continue;
            }
            if (y < anchor || on_path[y] || path_edges.size() + 1 >= max_length)
                continue;
            on_path[y] = 1;
            path_vertices.push_back(y);
            path_edges.push_back(e);
            extend(y);
            path_edges.pop_back();
            path_vertices.pop_back();
            on_path[y] = 0;
        }
    }
};

}  // namespace

std::vector<Circuit> circuits_up_to(const MultiGraph& g, std::size_t max_length)
{
    if (max_length == 0)
        throw GraphError("circuit length bound must be at least 1");
    CircuitSearch search{g, max_length};
    search.on_path.assign(g.vertex_bound(), 0);
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop())
            search.found.push_back(Circuit{{e}, {ed.u}});
    }
    if (max_length >= 2) {
        for (VertexId s : g.vertices()) {
            search.anchor = s;
            search.on_path[s] = 1;
            search.path_vertices = {s};
            search.path_edges.clear();
            search.extend(s);
            search.on_path[s] = 0;
        }
    }
    auto& out = search.found;
    std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        if (a.vertices != b.vertices)
            return a.vertices < b.vertices;
        return a.edges < b.edges;
    });
    return std::move(out);
}

std::vector<Circuit> short_circuits(const MultiGraph& g)
{
    return circuits_up_to(g, 5);
}

std::vector<Circuit> pentagons(const MultiGraph& g)
{
    std::vector<Circuit> out;
    for (auto& c : circuits_up_to(g, 5))
        if (c.length() == 5)
            out.push_back(std::move(c));
    return out;
}

std::size_t pentagon_count(const MultiGraph& g)
{
    return pentagons(g).size();
}

bool meets(const Circuit& a, const Circuit& b)
{
    for (VertexId v : a.vertices)
        if (b.contains_vertex(v))
            return true;
    return false;
}

std::vector<Circuit> find_breakers(const MultiGraph& g)
{
    auto all = short_circuits(g);
    std::vector<Circuit> out;
    for (const Circuit& c : all) {
        bool ok = std::all_of(all.begin(), all.end(), [&](const Circuit& d) { return meets(c, d); });
        if (ok)
            out.push_back(c);
    }
    return out;
}

bool is_interesting(const MultiGraph& g)
{
    if (!is_cubic(g) || g.order() < 10)
        return false;
    auto gi = girth(g);
    if (!gi || *gi >= 6)
        return true;
    return !find_breakers(g).empty();
}

}  // namespace petcheck
