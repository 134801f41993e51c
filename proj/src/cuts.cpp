#include "petcheck/cuts.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace petcheck {

namespace {

using Mask = std::uint64_t;

// Vertex ids packed into bit positions, in ascending id order.
struct BitGraph {
    std::size_t n = 0;
    std::vector<VertexId> ids;
    std::vector<int> index;
    struct Link {
        int a, b;
        EdgeId id;
    };
    std::vector<Link> links;           // non-loop edges
    std::vector<std::size_t> loops;    // loop count per bit
    std::vector<Mask> adj;

    explicit BitGraph(const MultiGraph& g)
    {
        n = g.order();
        if (n > kCutSearchMaxOrder)
            throw BoundExceeded("cut search supports at most " + std::to_string(kCutSearchMaxOrder) +
                                " vertices; got " + std::to_string(n));
        ids = g.vertices();
        index.assign(g.vertex_bound(), -1);
        for (std::size_t i = 0; i < n; ++i)
            index[ids[i]] = static_cast<int>(i);
        loops.assign(n, 0);
        adj.assign(n, 0);
        for (EdgeId e : g.edges()) {
            const Edge& ed = g.edge(e);
            int a = index[ed.u], b = index[ed.v];
            if (a == b) {
                ++loops[a];
                continue;
            }
            links.push_back({a, b, e});
            adj[a] |= Mask{1} << b;
            adj[b] |= Mask{1} << a;
        }
    }

    Mask full() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    std::size_t boundary_size(Mask x) const
    {
        std::size_t count = 0;
        for (const Link& l : links)
            count += ((x >> l.a) & 1) != ((x >> l.b) & 1);
        return count;
    }

    std::size_t components(Mask x) const
    {
        std::size_t count = 0;
        Mask left = x;
        while (left) {
            Mask frontier = left & (~left + 1);
            Mask reached = 0;
            while (frontier) {
                reached |= frontier;
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1)
                    next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
                frontier = next & x & ~reached;
            }
            left &= ~reached;
            ++count;
        }
        return count;
    }

    // Cyclomatic number of the subgraph induced by x.
    std::size_t cyclomatic(Mask x) const
    {
        std::size_t edges = 0;
        for (const Link& l : links)
            edges += ((x >> l.a) & 1) && ((x >> l.b) & 1);
        for (Mask f = x; f; f &= f - 1)
            edges += loops[static_cast<std::size_t>(std::countr_zero(f))];
        std::size_t vertices = static_cast<std::size_t>(std::popcount(x));
        return edges + components(x) - vertices;
    }

    bool shore(Mask x) const { return cyclomatic(x) >= 2 && cyclomatic(full() & ~x) >= 2; }

    std::vector<VertexId> side(Mask x) const
    {
        std::vector<VertexId> out;
        for (Mask f = x; f; f &= f - 1)
            out.push_back(ids[static_cast<std::size_t>(std::countr_zero(f))]);
        return out;
    }

    std::vector<EdgeId> boundary(Mask x) const
    {
        std::vector<EdgeId> out;
        for (const Link& l : links)
            if (((x >> l.a) & 1) != ((x >> l.b) & 1))
                out.push_back(l.id);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Branch and bound over side assignments in BFS order; each assigned vertex
// pays for the edges to already-assigned vertices on the other side.
void enumerate_small_cuts(const BitGraph& bg, std::size_t max_boundary, const std::function<void(Mask)>& visit)
{
    const std::size_t n = bg.n;
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (placed[s])
            continue;
        std::deque<int> queue{static_cast<int>(s)};
        placed[s] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (Mask f = bg.adj[static_cast<std::size_t>(x)]; f; f &= f - 1) {
                int y = std::countr_zero(f);
                if (!placed[static_cast<std::size_t>(y)]) {
                    placed[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
    }
    // Edge multiplicities towards earlier vertices in the order.
    std::vector<int> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> back(n);
    for (const auto& l : bg.links) {
        int a = l.a, b = l.b;
        if (position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)])
            std::swap(a, b);
        back[static_cast<std::size_t>(a)].push_back(b);
    }

    Mask chosen = 0;
    auto recurse = [&](auto&& self, std::size_t i, std::size_t cost) -> void {
        if (i == n) {
            visit(chosen);
            return;
        }
        const int v = order[i];
        for (int in_x = 1; in_x >= 0; --in_x) {
            std::size_t extra = 0;
            for (int w : back[static_cast<std::size_t>(v)])
                extra += static_cast<int>((chosen >> w) & 1) != in_x;
            if (cost + extra > max_boundary)
                continue;
            if (in_x)
                chosen |= Mask{1} << v;
            self(self, i + 1, cost + extra);
            chosen &= ~(Mask{1} << v);
        }
    };
    recurse(recurse, 0, 0);
}

bool lex_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Cut edge_cut(const MultiGraph& g, const std::vector<VertexId>& xs)
{
    std::vector<char> in(g.vertex_bound(), 0);
    for (VertexId v : xs) {
        if (!g.has_vertex(v))
            throw GraphError("unknown vertex id " + std::to_string(v));
        in[v] = 1;
    }
    Cut cut;
    for (VertexId v : g.vertices())
        if (in[v])
            cut.side.push_back(v);
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        if (in[ed.u] != in[ed.v])
            cut.boundary.push_back(e);
    }
    return cut;
}

std::size_t cyclomatic_number(const MultiGraph& g)
{
    return g.size() + component_count(g) - g.order();
}

bool circuit_count_at_least_two(const MultiGraph& g)
{
    return cyclomatic_number(g) >= 2;
}

void for_each_small_cut(const MultiGraph& g, std::size_t max_boundary, const std::function<void(const Cut&)>& visit)
{
    BitGraph bg(g);
    enumerate_small_cuts(bg, max_boundary, [&](Mask x) { visit(Cut{bg.side(x), bg.boundary(x)}); });
}

bool is_shore(const MultiGraph& g, const std::vector<VertexId>& xs, std::size_t max_boundary)
{
    Cut cut = edge_cut(g, xs);
    if (cut.boundary.size() > max_boundary)
        return false;
    std::vector<VertexId> rest;
    std::set_difference(g.vertices().begin(), g.vertices().end(), cut.side.begin(), cut.side.end(),
                        std::back_inserter(rest));
    return circuit_count_at_least_two(induced(g, cut.side)) && circuit_count_at_least_two(induced(g, rest));
}

std::vector<Shore> all_shores(const MultiGraph& g, std::size_t max_boundary)
{
    BitGraph bg(g);
    std::vector<Shore> out;
    enumerate_small_cuts(bg, max_boundary, [&](Mask x) {
        if (bg.shore(x))
            out.push_back(Shore{Cut{bg.side(x), bg.boundary(x)}});
    });
    return out;
}

std::optional<Shore> find_shore(const MultiGraph& g, std::size_t max_boundary)
{
    std::optional<Shore> best;
    for (Shore& s : all_shores(g, max_boundary)) {
        if (!best || s.cut.boundary.size() < best->cut.boundary.size() ||
            (s.cut.boundary.size() == best->cut.boundary.size() && lex_less(s.cut.side, best->cut.side)))
            best = std::move(s);
    }
    return best;
}

bool theta_connected_direct(const MultiGraph& g)
{
    if (!is_cubic(g))
        throw GraphError("theta-connectivity is defined for cubic graphs");
    auto gi = girth(g);
    if (gi && *gi < 5)
        return false;
    const std::size_t n = g.order();
    if (n > kDirectThetaMaxOrder)
        throw BoundExceeded("direct theta-connectivity check supports at most " +
                            std::to_string(kDirectThetaMaxOrder) + " vertices");
    if (n < 14)
        return true;
    BitGraph bg(g);
    // δ(X) = δ(V - X), so fixing the top vertex inside X covers every cut once.
    const Mask top = Mask{1} << (n - 1);
    for (Mask low = 0; low < (Mask{1} << (n - 1)); ++low) {
        Mask x = low | top;
        auto size = static_cast<std::size_t>(std::popcount(x));
        if (size < 7 || n - size < 7)
            continue;
        if (bg.boundary_size(x) < 6)
            return false;
    }
    return true;
}

bool theta_connected_via_shores(const MultiGraph& g)
{
    if (!is_cubic(g))
        throw GraphError("theta-connectivity is defined for cubic graphs");
    auto gi = girth(g);
    if (gi && *gi < 5)
        return false;
    return !find_shore(g).has_value();
}

bool is_theta_connected(const MultiGraph& g)
{
    if (g.order() <= kDirectThetaMaxOrder)
        return theta_connected_direct(g);
    return theta_connected_via_shores(g);
}

std::optional<Shore> push_shore(const MultiGraph& g, const Circuit& c)
{
    if (!is_interesting(g))
        throw GraphError("push_shore requires an interesting graph");
    auto breakers = find_breakers(g);
    if (std::find(breakers.begin(), breakers.end(), c) == breakers.end())
        throw GraphError("push_shore requires a breaker of the graph");
    std::optional<Shore> best;
    std::size_t best_meet = 0;
    auto meet_count = [&](const Shore& s) {
        std::size_t k = 0;
        for (VertexId v : s.cut.side)
            k += c.contains_vertex(v);
        return k;
    };
    for (Shore& s : all_shores(g)) {
        std::size_t m = meet_count(s);
        bool better = !best;
        if (best) {
            auto sb = s.cut.boundary.size(), bb = best->cut.boundary.size();
            better = sb < bb || (sb == bb && (m < best_meet || (m == best_meet && lex_less(s.cut.side, best->cut.side))));
        }
        if (better) {
            best = std::move(s);
            best_meet = m;
        }
    }
    return best;
}

}  // namespace petcheck
