#include "petcheck/fixtures.hpp"

#include "petcheck/circuits.hpp"
#include "petcheck/io.hpp"
#include "petcheck/planarity.hpp"
#include "petcheck/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#ifndef PETCHECK_DEFAULT_DATA_DIR
#define PETCHECK_DEFAULT_DATA_DIR "data"
#endif

namespace petcheck {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

VertexId vid(std::size_t x) { return static_cast<VertexId>(x); }

}  // namespace

MultiGraph petersen_graph()
{
    EdgeList es;
    for (std::size_t i = 0; i < 5; ++i)
        es.emplace_back(vid(i), vid((i + 1) % 5));
    for (std::size_t i = 0; i < 5; ++i)
        es.emplace_back(vid(i), vid(i + 5));
    for (std::size_t i = 0; i < 5; ++i)
        es.emplace_back(vid(5 + i), vid(5 + (i + 2) % 5));
    return graph_from_edges(10, es, "petersen");
}

MultiGraph kneser_petersen_graph()
{
    std::vector<std::pair<int, int>> sets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            sets.emplace_back(a, b);
    EdgeList es;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            auto [a, b] = sets[i];
            auto [c, d] = sets[j];
            if (a != c && a != d && b != c && b != d)
                es.emplace_back(vid(i), vid(j));
        }
    return graph_from_edges(sets.size(), es, "kneser_petersen");
}

MultiGraph heawood_graph()
{
    EdgeList es;
    for (std::size_t i = 0; i < 14; ++i)
        es.emplace_back(vid(i), vid((i + 1) % 14));
    for (std::size_t i = 0; i < 14; i += 2)
        es.emplace_back(vid(i), vid((i + 5) % 14));
    return graph_from_edges(14, es, "heawood");
}

MultiGraph dodecahedron_graph()
{
    // Outer pentagon a0..a4, middle 10-cycle b0..b9, inner pentagon c0..c4.
    auto a = [](std::size_t i) { return vid(i % 5); };
    auto b = [](std::size_t i) { return vid(5 + i % 10); };
    auto c = [](std::size_t i) { return vid(15 + i % 5); };
    EdgeList es;
    for (std::size_t i = 0; i < 5; ++i)
        es.emplace_back(a(i), a(i + 1));
    for (std::size_t i = 0; i < 10; ++i)
        es.emplace_back(b(i), b(i + 1));
    for (std::size_t i = 0; i < 5; ++i)
        es.emplace_back(a(i), b(2 * i));
    for (std::size_t i = 0; i < 5; ++i)
        es.emplace_back(b(2 * i + 1), c(i));
    for (std::size_t i = 0; i < 5; ++i)
        es.emplace_back(c(i), c(i + 1));
    return graph_from_edges(20, es, "dodecahedron");
}

MultiGraph dodeca_apex_graph()
{
    MultiGraph h = dodecahedron_graph();
    auto emb = planar_embedding(h);
    if (!emb)
        throw GraphError("dodecahedron embedding failed");
    std::vector<Face> fs = faces(h, *emb);

    std::vector<std::vector<std::size_t>> faces_of(h.edge_bound());
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (EdgeId e : fs[f].edges)
            faces_of[e].push_back(f);

    std::vector<EdgeId> chosen;
    std::vector<int> face_hits(fs.size(), 0);
    std::vector<int> blocked(h.vertex_bound(), 0);
    const std::vector<EdgeId>& edges = h.edges();

    // Induced matching: no two chosen edges share or join endpoints.
    std::function<bool(std::size_t)> pick = [&](std::size_t from) {
        if (chosen.size() == 6)
            return std::all_of(face_hits.begin(), face_hits.end(), [](int x) { return x == 1; });
        for (std::size_t i = from; i < edges.size(); ++i) {
            const Edge& e = h.edge(edges[i]);
            if (blocked[e.u] || blocked[e.v])
                continue;
            bool fits = std::all_of(faces_of[e.id].begin(), faces_of[e.id].end(),
                                    [&](std::size_t f) { return face_hits[f] == 0; });
            if (!fits)
                continue;
            chosen.push_back(e.id);
            for (std::size_t f : faces_of[e.id])
                ++face_hits[f];
            std::vector<VertexId> touched{e.u, e.v};
            for (VertexId x : {e.u, e.v})
                for (VertexId y : h.neighbours(x))
                    touched.push_back(y);
            for (VertexId x : touched)
                ++blocked[x];
            if (pick(i + 1))
                return true;
            for (VertexId x : touched)
                --blocked[x];
            for (std::size_t f : faces_of[e.id])
                --face_hits[f];
            chosen.pop_back();
        }
        return false;
    };
    if (!pick(0))
        throw GraphError("no face-hitting induced matching in the dodecahedron");

    MultiGraph g = h;
    VertexId hub = g.add_vertex();
    for (EdgeId e : chosen) {
        VertexId w = subdivide_edge(g, e);
        g.add_edge(hub, w);
    }
    g = compacted(g);
    g.set_name("dodeca_apex");
    return g;
}

MultiGraph complete_graph(std::size_t n)
{
    EdgeList es;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            es.emplace_back(vid(i), vid(j));
    return graph_from_edges(n, es, "K" + std::to_string(n));
}

MultiGraph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    EdgeList es;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            es.emplace_back(vid(i), vid(a + j));
    return graph_from_edges(a + b, es, "K" + std::to_string(a) + "," + std::to_string(b));
}

MultiGraph cycle_graph(std::size_t n)
{
    EdgeList es;
    for (std::size_t i = 0; i < n; ++i)
        es.emplace_back(vid(i), vid((i + 1) % n));
    return graph_from_edges(n, es, "C" + std::to_string(n));
}

MultiGraph prism_graph(std::size_t k)
{
    EdgeList es;
    for (std::size_t i = 0; i < k; ++i) {
        es.emplace_back(vid(i), vid((i + 1) % k));
        es.emplace_back(vid(k + i), vid(k + (i + 1) % k));
        es.emplace_back(vid(i), vid(k + i));
    }
    return graph_from_edges(2 * k, es, "prism" + std::to_string(k));
}

MultiGraph cube_graph()
{
    EdgeList es;
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t bit = 1; bit < 8; bit <<= 1)
            if (!(x & bit))
                es.emplace_back(vid(x), vid(x | bit));
    return graph_from_edges(8, es, "cube");
}

std::string data_dir()
{
    if (const char* env = std::getenv("PETCHECK_DATA_DIR"); env && *env)
        return env;
    return PETCHECK_DEFAULT_DATA_DIR;
}

bool starfish_shape_ok(const MultiGraph& g)
{
    if (!is_cubic(g) || girth(g) != std::optional<std::size_t>(5))
        return false;
    std::vector<Circuit> ps = pentagons(g);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (meets(ps[i], ps[j]))
                continue;
            for (std::size_t k = j + 1; k < ps.size(); ++k)
                if (!meets(ps[i], ps[k]) && !meets(ps[j], ps[k]))
                    return true;
        }
    return false;
}

MultiGraph starfish_graph()
{
    std::filesystem::path path = std::filesystem::path(data_dir()) / "fixtures" / "starfish.adj";
    std::ifstream in(path);
    if (!in)
        throw FixtureUnavailable("fixture unavailable: starfish (missing " + path.string() + ")");
    MultiGraph g = parse_adjacency(in);
    if (!starfish_shape_ok(g))
        throw FixtureUnavailable("fixture unavailable: starfish data in " + path.string() +
                                 " is not cubic of girth 5 with three disjoint pentagons");
    g.set_name("starfish");
    return g;
}

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names{"petersen", "heawood", "dodecahedron", "dodeca_apex", "figure2",
                                                "starfish"};
    return names;
}

MultiGraph fixture(std::string_view name)
{
    if (name == "petersen")
        return petersen_graph();
    if (name == "heawood")
        return heawood_graph();
    if (name == "dodecahedron")
        return dodecahedron_graph();
    if (name == "dodeca_apex")
        return dodeca_apex_graph();
    if (name == "figure2")
        return figure2_graph();
    if (name == "starfish")
        return starfish_graph();
    throw GraphError("unknown fixture: " + std::string(name));
}

}  // namespace petcheck
