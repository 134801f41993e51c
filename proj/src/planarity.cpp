#include "petcheck/planarity.hpp"

#include "petcheck/circuits.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace petcheck {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

EdgeEnd end_at(const Edge& ed, VertexId v)
{
    return EdgeEnd{ed.id, ed.u == v ? 0 : 1};
}

VertexId end_vertex(const MultiGraph& g, EdgeEnd end)
{
    const Edge& ed = g.edge(end.edge);
    return end.side == 0 ? ed.u : ed.v;
}

}  // namespace

bool Face::is_circuit() const
{
    std::vector<VertexId> vs = vertices;
    std::sort(vs.begin(), vs.end());
    return !vs.empty() && std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

std::optional<Embedding> planar_embedding(const MultiGraph& g)
{
    Embedding emb;
    emb.rotation.assign(g.vertex_bound(), {});
    if (g.empty())
        return emb;

    // Simple skeleton: one representative per adjacent pair, loops dropped.
    std::vector<int> index(g.vertex_bound(), -1);
    int n = 0;
    for (VertexId v : g.vertices())
        index[v] = n++;
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles;
    std::vector<EdgeId> loops;
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop())
            loops.push_back(e);
        else
            bundles[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
    BoostGraph bg(static_cast<std::size_t>(n));
    std::vector<EdgeId> representative;
    auto edge_index = boost::get(boost::edge_index, bg);
    for (const auto& [pair, list] : bundles) {
        auto [be, ok] = boost::add_edge(static_cast<std::size_t>(index[pair.first]),
                                        static_cast<std::size_t>(index[pair.second]), bg);
        (void)ok;
        boost::put(edge_index, be, static_cast<int>(representative.size()));
        representative.push_back(list.front());
    }
    std::vector<std::vector<BoostEdge>> storage(static_cast<std::size_t>(n));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar)
        return std::nullopt;

    const auto& ids = g.vertices();
    for (int i = 0; i < n; ++i) {
        VertexId v = ids[static_cast<std::size_t>(i)];
        auto& rot = emb.rotation[v];
        for (const BoostEdge& be : storage[static_cast<std::size_t>(i)]) {
            EdgeId rep = representative[static_cast<std::size_t>(boost::get(edge_index, be))];
            const Edge& ed = g.edge(rep);
            const auto& list = bundles[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}];
            // Parallel edges sit side by side, in opposite orders at the two ends.
            if (v == std::min(ed.u, ed.v)) {
                for (EdgeId e : list)
                    rot.push_back(end_at(g.edge(e), v));
            } else {
                for (auto it = list.rbegin(); it != list.rend(); ++it)
                    rot.push_back(end_at(g.edge(*it), v));
            }
        }
    }
    for (EdgeId e : loops) {
        VertexId v = g.edge(e).u;
        emb.rotation[v].push_back(EdgeEnd{e, 0});
        emb.rotation[v].push_back(EdgeEnd{e, 1});
    }
    return emb;
}

bool is_planar(const MultiGraph& g)
{
    return planar_embedding(g).has_value();
}

std::vector<Face> faces(const MultiGraph& g, const Embedding& emb)
{
    // pos[e][side]: index of that end in the rotation of its vertex.
    std::vector<std::array<std::size_t, 2>> pos(g.edge_bound(), {SIZE_MAX, SIZE_MAX});
    if (emb.rotation.size() < g.vertex_bound())
        throw GraphError("rotation system does not cover every vertex");
    std::size_t ends = 0;
    for (VertexId v : g.vertices()) {
        const auto& rot = emb.rotation[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            EdgeEnd end = rot[i];
            if (!g.has_edge(end.edge) || end.side < 0 || end.side > 1 || end_vertex(g, end) != v)
                throw GraphError("rotation at vertex " + std::to_string(v) + " lists a foreign edge end");
            auto& slot = pos[end.edge][static_cast<std::size_t>(end.side)];
            if (slot != SIZE_MAX)
                throw GraphError("edge end listed twice in rotation");
            slot = i;
            ++ends;
        }
    }
    if (ends != 2 * g.size())
        throw GraphError("rotation system misses edge ends");

    std::vector<std::array<char, 2>> used(g.edge_bound(), {0, 0});
    std::vector<Face> out;
    for (EdgeId e0 : g.edges()) {
        for (int s0 = 0; s0 < 2; ++s0) {
            if (used[e0][static_cast<std::size_t>(s0)])
                continue;
            Face face;
            EdgeEnd dart{e0, s0};
            while (!used[dart.edge][static_cast<std::size_t>(dart.side)]) {
                used[dart.edge][static_cast<std::size_t>(dart.side)] = 1;
                face.vertices.push_back(end_vertex(g, dart));
                face.edges.push_back(dart.edge);
                EdgeEnd arrive{dart.edge, 1 - dart.side};
                VertexId y = end_vertex(g, arrive);
                const auto& rot = emb.rotation[y];
                dart = rot[(pos[arrive.edge][static_cast<std::size_t>(arrive.side)] + 1) % rot.size()];
            }
            if (dart.edge != e0 || dart.side != s0)
                throw GraphError("face traversal does not close");
            out.push_back(std::move(face));
        }
    }

    std::size_t isolated = 0;
    for (VertexId v : g.vertices())
        isolated += g.degree(v) == 0;
    const long long lhs = static_cast<long long>(g.order()) - static_cast<long long>(g.size()) +
                          static_cast<long long>(out.size()) + static_cast<long long>(isolated);
    if (lhs != 2 * static_cast<long long>(component_count(g)))
        throw GraphError("rotation system is not planar (Euler's formula fails)");
    return out;
}

std::size_t pentagonal_face_count(const MultiGraph& g, const Embedding& emb)
{
    std::size_t count = 0;
    for (const Face& f : faces(g, emb))
        count += f.length() == 5 && f.is_circuit();
    return count;
}

std::optional<VertexId> is_apex(const MultiGraph& g)
{
    if (g.empty())
        return std::nullopt;
    if (is_planar(g))
        return g.vertices().front();
    for (VertexId v : g.vertices()) {
        const VertexId one[] = {v};
        if (is_planar(delete_vertices(g, one)))
            return v;
    }
    return std::nullopt;
}

namespace {

void require_cubic_girth5(const MultiGraph& g)
{
    if (!is_cubic(g))
        throw GraphError("pentagon bound requires a cubic graph");
    auto gi = girth(g);
    if (gi && *gi < 5)
        throw GraphError("pentagon bound requires girth at least five");
}

}  // namespace

PentagonBound apex_pentagon_bound(const MultiGraph& g)
{
    require_cubic_girth5(g);
    if (!is_apex(g))
        throw GraphError("pentagon bound requires an apex graph");
    std::size_t count = pentagon_count(g);
    return {count, count >= 6};
}

bool matches_crossing_pattern(const std::array<int, 8>& labels, CrossingOrder mode, std::size_t* start, bool* reversed)
{
    for (int dir = 0; dir < (mode == CrossingOrder::permissive ? 2 : 1); ++dir) {
        for (std::size_t r = 0; r < 8; ++r) {
            auto at = [&](std::size_t i) {
                return dir == 0 ? labels[(r + i) % 8] : labels[(r + 8 - i) % 8];
            };
            // x y x y z w z w with x, y, z, w distinct.
            int x = at(0), y = at(1), z = at(4), w = at(5);
            if (at(2) != x || at(3) != y || at(6) != z || at(7) != w)
                continue;
            std::array<int, 4> all{x, y, z, w};
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end())
                continue;
            if (start)
                *start = r;
            if (reversed)
                *reversed = dir == 1;
            return true;
        }
    }
    return false;
}

namespace {

// Vertex 3-connectivity of a simple graph by removing every vertex pair.
bool three_connected_simple(const MultiGraph& h)
{
    if (h.order() < 4 || !is_connected(h))
        return false;
    for (VertexId v : h.vertices()) {
        if (h.multiplicity(v, v) > 0)
            return false;
        auto nb = h.neighbours(v);
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            return false;
    }
    const auto& vs = h.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const VertexId pair[] = {vs[i], vs[j]};
            if (!is_connected(delete_vertices(h, pair)))
                return false;
        }
    }
    return true;
}

// True when every planar embedding of g has the same faces: g is connected,
// has minimum degree >= 2, and is a subdivision of a simple 3-connected graph.
bool faces_are_unique(const MultiGraph& g)
{
    if (!is_connected(g) || min_degree(g) < 2)
        return false;
    return three_connected_simple(suppress_degree_two(g));
}

struct CrossingSearch {
    const MultiGraph& g;
    CrossingOrder mode;
    std::array<EdgeId, 4> removed{};
    std::vector<int> label;  // edge index of a terminal, -1 otherwise

    std::array<int, 8> terminal_labels(const std::vector<VertexId>& cycle) const
    {
        std::array<int, 8> out{};
        std::size_t k = 0;
        for (VertexId v : cycle)
            if (label[v] >= 0 && k < 8)
                out[k++] = label[v];
        return out;
    }

    std::size_t terminal_count(const std::vector<VertexId>& cycle) const
    {
        std::size_t k = 0;
        for (VertexId v : cycle)
            k += label[v] >= 0;
        return k;
    }

    DoublecrossWitness make_witness(const std::vector<VertexId>& cycle, Embedding emb, std::size_t outer) const
    {
        std::array<int, 8> labs = terminal_labels(cycle);
        std::size_t start = 0;
        bool rev = false;
        matches_crossing_pattern(labs, mode, &start, &rev);
        std::vector<VertexId> terms;
        for (VertexId v : cycle)
            if (label[v] >= 0)
                terms.push_back(v);
        std::array<VertexId, 8> order{};
        for (std::size_t i = 0; i < 8; ++i)
            order[i] = rev ? terms[(start + 8 - i) % 8] : terms[(start + i) % 8];
        // Pattern positions 0,1,4,5 name e1..e4; their partners sit at 2,3,6,7.
        DoublecrossWitness w;
        const std::size_t first[] = {0, 1, 4, 5};
        for (std::size_t i = 0; i < 4; ++i)
            w.removed[i] = removed[static_cast<std::size_t>(label[order[first[i]]])];
        w.order = order;
        emb.outer_face = outer;
        w.embedding = std::move(emb);
        w.outer_circuit = cycle;
        return w;
    }

    // Faces of the embedding found by the planarity test.
    std::optional<DoublecrossWitness> from_faces(const MultiGraph& rest, const Embedding& emb) const
    {
        auto fs = faces(rest, emb);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const Face& f = fs[i];
            if (!f.is_circuit() || terminal_count(f.vertices) != 8)
                continue;
            if (matches_crossing_pattern(terminal_labels(f.vertices), mode))
                return make_witness(f.vertices, emb, i);
        }
        return std::nullopt;
    }

    // An embedding of `rest` in which `cycle` bounds a face, if one exists:
    // subdivide every cycle edge and join a new hub to all cycle vertices; the
    // hub side is then forced to be empty.
    std::optional<Embedding> facial_embedding(const MultiGraph& rest, const Circuit& cycle) const
    {
        MultiGraph aug = rest;
        std::vector<std::pair<EdgeId, EdgeId>> halves;  // (kept half at u, new half at v)
        std::vector<VertexId> rim;
        for (std::size_t i = 0; i < cycle.length(); ++i) {
            EdgeId e = cycle.edges[i];
            const Edge ed = aug.edge(e);
            VertexId mid = subdivide_edge(aug, e);
            EdgeId other = aug.incident(mid)[0] == e ? aug.incident(mid)[1] : aug.incident(mid)[0];
            halves.emplace_back(e, other);
            rim.push_back(cycle.vertices[i]);
            rim.push_back(mid);
            (void)ed;
        }
        VertexId hub = aug.add_vertex();
        for (VertexId r : rim)
            aug.add_edge(r, hub);
        auto emb = planar_embedding(aug);
        if (!emb)
            return std::nullopt;
        std::vector<EdgeId> owner(aug.edge_bound(), kNoEdge);  // new half -> original edge
        for (auto [kept, fresh] : halves)
            owner[fresh] = kept;
        Embedding out;
        out.rotation.assign(rest.vertex_bound(), {});
        for (VertexId v : rest.vertices()) {
            for (EdgeEnd end : emb->rotation[v]) {
                if (rest.has_edge(end.edge) && owner[end.edge] == kNoEdge) {
                    out.rotation[v].push_back(end);
                    continue;
                }
                if (end.edge < owner.size() && owner[end.edge] != kNoEdge) {
                    // Half next to the original v end.
                    out.rotation[v].push_back(EdgeEnd{owner[end.edge], 1});
                }
                // Hub spokes are dropped.
            }
        }
        return out;
    }

    // Circuits of `rest` through all eight terminals whose labels fit the pattern.
    std::optional<DoublecrossWitness> from_circuits(const MultiGraph& rest) const
    {
        VertexId anchor = kNoVertex;
        for (VertexId v : rest.vertices())
            if (label[v] >= 0) {
                anchor = v;
                break;
            }
        std::vector<char> on(rest.vertex_bound(), 0);
        std::vector<VertexId> pv{anchor};
        std::vector<EdgeId> pe;
        std::optional<DoublecrossWitness> found;
        on[anchor] = 1;
        auto dfs = [&](auto&& self, VertexId x, std::size_t terms) -> void {
            if (found)
                return;
            for (EdgeId e : rest.incident(x)) {
                const Edge& ed = rest.edge(e);
                if (ed.is_loop() || (!pe.empty() && e == pe.back()))
                    continue;
                VertexId y = ed.other(x);
                if (y == anchor) {
                    if (terms == 8 && pe.size() >= 2 && pe.front() < e) {
                        std::vector<EdgeId> es = pe;
                        es.push_back(e);
                        if (!matches_crossing_pattern(terminal_labels(pv), mode))
                            continue;
                        Circuit c{es, pv};
                        auto emb = facial_embedding(rest, c);
                        if (!emb)
                            continue;
                        auto fs = faces(rest, *emb);
                        auto want = c.edge_set();
                        for (std::size_t i = 0; i < fs.size(); ++i) {
                            Face f = fs[i];
                            std::vector<EdgeId> got = f.edges;
                            std::sort(got.begin(), got.end());
                            if (got == want) {
                                found = make_witness(f.vertices, *emb, i);
                                return;
                            }
                        }
                        throw GraphError("facial embedding lost the requested circuit");
                    }
                    continue;
                }
                if (on[y])
                    continue;
                on[y] = 1;
                pv.push_back(y);
                pe.push_back(e);
                self(self, y, terms + (label[y] >= 0));
                pe.pop_back();
                pv.pop_back();
                on[y] = 0;
                if (found)
                    return;
            }
        };
        dfs(dfs, anchor, 1);
        return found;
    }
};

}  // namespace

std::optional<DoublecrossWitness> is_doublecross(const MultiGraph& g, CrossingOrder mode)
{
    if (g.size() < 4)
        throw GraphError("doublecross search needs at least four edges");
    if (g.size() > kDoublecrossMaxEdges)
        throw BoundExceeded("doublecross search supports at most " + std::to_string(kDoublecrossMaxEdges) + " edges");
    if (g.order() < 8)
        return std::nullopt;
    const auto& es = g.edges();
    const std::size_t m = es.size();
    CrossingSearch search{g, mode};
    search.label.assign(g.vertex_bound(), -1);
    std::array<std::size_t, 4> pick{};
    for (pick[0] = 0; pick[0] < m; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < m; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < m; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < m; ++pick[3]) {
                    std::fill(search.label.begin(), search.label.end(), -1);
                    bool distinct = true;
                    for (std::size_t i = 0; i < 4 && distinct; ++i) {
                        const Edge& ed = g.edge(es[pick[i]]);
                        search.removed[i] = ed.id;
                        for (VertexId x : {ed.u, ed.v}) {
                            if (search.label[x] >= 0) {
                                distinct = false;
                                break;
                            }
                            search.label[x] = static_cast<int>(i);
                        }
                    }
                    if (!distinct)
                        continue;
                    MultiGraph rest = delete_edges(g, search.removed);
                    auto emb = planar_embedding(rest);
                    if (!emb)
                        continue;
                    if (auto w = search.from_faces(rest, *emb))
                        return w;
                    if (faces_are_unique(rest))
                        continue;
                    if (auto w = search.from_circuits(rest))
                        return w;
                }
    return std::nullopt;
}

bool verify_doublecross(const MultiGraph& g, const DoublecrossWitness& w)
{
    std::vector<EdgeId> removed(w.removed.begin(), w.removed.end());
    std::sort(removed.begin(), removed.end());
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
        return false;
    for (EdgeId e : removed)
        if (!g.has_edge(e))
            return false;
    // order = u1 u2 v1 v2 u3 u4 v3 v4; e_i joins u_i and v_i.
    const std::size_t u_pos[] = {0, 1, 4, 5};
    const std::size_t v_pos[] = {2, 3, 6, 7};
    for (std::size_t i = 0; i < 4; ++i) {
        const Edge& ed = g.edge(w.removed[i]);
        VertexId a = w.order[u_pos[i]], b = w.order[v_pos[i]];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
            return false;
    }
    std::array<VertexId, 8> sorted = w.order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    MultiGraph rest = delete_edges(g, removed);
    std::vector<Face> fs;
    try {
        fs = faces(rest, w.embedding);
    } catch (const GraphError&) {
        return false;
    }
    if (!w.embedding.outer_face || *w.embedding.outer_face >= fs.size())
        return false;
    const Face& outer = fs[*w.embedding.outer_face];
    if (!outer.is_circuit())
        return false;
    // The outer face must be the recorded circuit, read in some direction.
    const auto& cyc = outer.vertices;
    if (cyc.size() != w.outer_circuit.size())
        return false;
    auto same_cycle = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        const std::size_t n = a.size();
        for (std::size_t r = 0; r < n; ++r)
            for (int dir = 0; dir < 2; ++dir) {
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i)
                    ok = a[i] == (dir == 0 ? b[(r + i) % n] : b[(r + n - i) % n]);
                if (ok)
                    return true;
            }
        return false;
    };
    if (!same_cycle(cyc, w.outer_circuit))
        return false;
    // Terminals appear on the circuit in the listed cyclic order.
    std::vector<VertexId> seq;
    for (VertexId v : cyc)
        if (std::find(w.order.begin(), w.order.end(), v) != w.order.end())
            seq.push_back(v);
    if (seq.size() != 8)
        return false;
    std::vector<VertexId> want(w.order.begin(), w.order.end());
    return same_cycle(seq, want);
}

PentagonBound doublecross_pentagon_bound(const MultiGraph& g)
{
    require_cubic_girth5(g);
    if (!is_doublecross(g))
        throw GraphError("pentagon bound requires a doublecross graph");
    std::size_t count = pentagon_count(g);
    return {count, count >= 6};
}

}  // namespace petcheck
