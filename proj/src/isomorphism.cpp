#include "petcheck/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace petcheck {

namespace {

using Signature = std::vector<long long>;

// Joint colour refinement of two graphs so colours are comparable.
struct Refinement {
    std::vector<int> colour_g, colour_h;
    bool balanced = true;
};

std::vector<std::pair<VertexId, std::size_t>> neighbour_counts(const MultiGraph& g, VertexId v)
{
    std::map<VertexId, std::size_t> counts;
    for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (w != v)
            ++counts[w];
    }
    return {counts.begin(), counts.end()};
}

Refinement refine(const MultiGraph& g, const MultiGraph& h, const std::vector<std::pair<VertexId, VertexId>>& forced)
{
    Refinement r;
    r.colour_g.assign(g.vertex_bound(), -1);
    r.colour_h.assign(h.vertex_bound(), -1);
    auto initial = [&](const MultiGraph& x, VertexId v, bool is_g) {
        long long tag = 0;
        for (std::size_t i = 0; i < forced.size(); ++i)
            if ((is_g ? forced[i].first : forced[i].second) == v)
                tag = static_cast<long long>(i) + 1;
        return Signature{tag, static_cast<long long>(x.degree(v)), static_cast<long long>(x.multiplicity(v, v))};
    };
    std::map<Signature, int> palette;
    auto colour_of = [&](const Signature& s) {
        auto [it, inserted] = palette.emplace(s, static_cast<int>(palette.size()));
        return it->second;
    };
    for (VertexId v : g.vertices())
        r.colour_g[v] = colour_of(initial(g, v, true));
    for (VertexId v : h.vertices())
        r.colour_h[v] = colour_of(initial(h, v, false));

    std::size_t classes = palette.size();
    while (true) {
        std::map<Signature, int> next;
        auto signature = [&](const MultiGraph& x, const std::vector<int>& col, VertexId v) {
            Signature s{col[v]};
            std::vector<std::pair<int, std::size_t>> nb;
            for (auto [w, m] : neighbour_counts(x, v))
                nb.emplace_back(col[w], m);
            std::sort(nb.begin(), nb.end());
            for (auto [c, m] : nb) {
                s.push_back(c);
                s.push_back(static_cast<long long>(m));
            }
            return s;
        };
        std::vector<int> ng(g.vertex_bound(), -1), nh(h.vertex_bound(), -1);
        auto colour_next = [&](const Signature& s) {
            auto [it, inserted] = next.emplace(s, static_cast<int>(next.size()));
            return it->second;
        };
        for (VertexId v : g.vertices())
            ng[v] = colour_next(signature(g, r.colour_g, v));
        for (VertexId v : h.vertices())
            nh[v] = colour_next(signature(h, r.colour_h, v));
        r.colour_g = std::move(ng);
        r.colour_h = std::move(nh);
        if (next.size() == classes)
            break;
        classes = next.size();
    }
    std::map<int, long long> balance;
    for (VertexId v : g.vertices())
        ++balance[r.colour_g[v]];
    for (VertexId v : h.vertices())
        --balance[r.colour_h[v]];
    r.balanced = std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
    return r;
}

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& g, const MultiGraph& h,
                                                      const std::vector<std::pair<VertexId, VertexId>>& forced)
{
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;
    for (auto [a, b] : forced)
        if (!g.has_vertex(a) || !h.has_vertex(b))
            return std::nullopt;
    Refinement r = refine(g, h, forced);
    if (!r.balanced)
        return std::nullopt;

    // Visit g in BFS order from the rarest colour so each step is constrained.
    std::map<int, std::size_t> freq;
    for (VertexId v : g.vertices())
        ++freq[r.colour_g[v]];
    std::vector<VertexId> order;
    std::vector<char> queued(g.vertex_bound(), 0);
    while (order.size() < g.order()) {
        VertexId seed = kNoVertex;
        for (VertexId v : g.vertices())
            if (!queued[v] && (seed == kNoVertex || freq[r.colour_g[v]] < freq[r.colour_g[seed]]))
                seed = v;
        std::size_t head = order.size();
        order.push_back(seed);
        queued[seed] = 1;
        while (head < order.size()) {
            VertexId x = order[head++];
            for (VertexId y : g.neighbours(x))
                if (!queued[y]) {
                    queued[y] = 1;
                    order.push_back(y);
                }
        }
    }

    std::vector<VertexId> map(g.vertex_bound(), kNoVertex);
    std::vector<char> taken(h.vertex_bound(), 0);
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj_g(g.vertex_bound());
    for (VertexId v : g.vertices())
        adj_g[v] = neighbour_counts(g, v);

    auto consistent = [&](VertexId x, VertexId y) {
        if (r.colour_g[x] != r.colour_h[y])
            return false;
        if (g.multiplicity(x, x) != h.multiplicity(y, y))
            return false;
        std::size_t mapped_neighbours = 0;
        for (auto [w, m] : adj_g[x]) {
            if (map[w] == kNoVertex)
                continue;
            ++mapped_neighbours;
            if (h.multiplicity(y, map[w]) != m)
                return false;
        }
        // y must not be adjacent to mapped vertices that x is not adjacent to.
        std::size_t mapped_h = 0;
        for (auto [w, m] : neighbour_counts(h, y))
            mapped_h += taken[w] ? 1 : 0;
        return mapped_h == mapped_neighbours;
    };

    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size())
            return true;
        VertexId x = order[i];
        for (VertexId y : h.vertices()) {
            if (taken[y] || !consistent(x, y))
                continue;
            map[x] = y;
            taken[y] = 1;
            if (self(self, i + 1))
                return true;
            map[x] = kNoVertex;
            taken[y] = 0;
        }
        return false;
    };
    if (!search(search, 0))
        return std::nullopt;
    return map;
}

bool is_isomorphic(const MultiGraph& g, const MultiGraph& h)
{
    return find_isomorphism(g, h).has_value();
}

std::vector<VertexId> vertex_orbit(const MultiGraph& g, VertexId v)
{
    std::vector<VertexId> out;
    for (VertexId w : g.vertices())
        if (w == v || find_isomorphism(g, g, {{v, w}}))
            out.push_back(w);
    return out;
}

bool neighbourhood_fully_symmetric(const MultiGraph& g, VertexId v)
{
    if (g.multiplicity(v, v) > 0)
        return false;
    std::vector<VertexId> nb = g.neighbours(v);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
        return false;
    std::vector<VertexId> perm = nb;
    do {
        std::vector<std::pair<VertexId, VertexId>> forced{{v, v}};
        for (std::size_t i = 0; i < nb.size(); ++i)
            forced.emplace_back(nb[i], perm[i]);
        if (!find_isomorphism(g, g, forced))
            return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace petcheck
