#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

#include "petcheck/circuits.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/planarity.hpp"

using namespace petcheck;

namespace {

// Outer 8-cycle u1 u2 v1 v2 u3 u4 v3 v4 with chords u_i v_i.
MultiGraph crossing_chords()
{
    std::vector<std::pair<VertexId, VertexId>> es;
    for (VertexId i = 0; i < 8; ++i) es.emplace_back(i, (i + 1) % 8);
    es.insert(es.end(), {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    return graph_from_edges(8, es);
}

MultiGraph theta_graph()
{
    MultiGraph t(2);
    for (int i = 0; i < 3; ++i) t.add_edge(0, 1);
    return t;
}

}  // namespace

TEST_SUITE("planarity")
{
    TEST_CASE("planar_embedding")
    {
        auto d = dodecahedron_graph();
        auto emb = planar_embedding(d);
        REQUIRE(emb.has_value());
        auto fs = faces(d, *emb);
        CHECK(fs.size() == 12);
        CHECK_FALSE(planar_embedding(complete_graph(5)).has_value());
        CHECK_FALSE(is_planar(complete_bipartite_graph(3, 3)));
    }

    TEST_CASE("Petersen minus a vertex is not planar")
    {
        // Every vertex-deleted subgraph still contains a K3,3 subdivision.
        auto p = petersen_graph();
        for (VertexId v : p.vertices()) {
            std::vector<VertexId> one{v};
            CHECK_FALSE(is_planar(delete_vertices(p, one)));
        }
    }

    TEST_CASE("faces")
    {
        auto c5 = cycle_graph(5);
        auto f5 = faces(c5, *planar_embedding(c5));
        CHECK(f5.size() == 2);
        for (const auto& f : f5) CHECK(f.length() == 5);

        auto d = dodecahedron_graph();
        for (const auto& f : faces(d, *planar_embedding(d))) {
            CHECK(f.length() == 5);
            CHECK(f.is_circuit());
        }
        auto t = theta_graph();
        CHECK(faces(t, *planar_embedding(t)).size() == 3);
    }

    TEST_CASE("pentagonal_face_count")
    {
        auto d = dodecahedron_graph();
        CHECK(pentagonal_face_count(d, *planar_embedding(d)) == 12);
        auto c6 = cycle_graph(6);
        CHECK(pentagonal_face_count(c6, *planar_embedding(c6)) == 0);
        auto c5 = cycle_graph(5);
        CHECK(pentagonal_face_count(c5, *planar_embedding(c5)) == 2);
    }

    TEST_CASE("is_apex")
    {
        CHECK_FALSE(is_apex(petersen_graph()).has_value());
        auto da = dodeca_apex_graph();
        auto a = is_apex(da);
        REQUIRE(a.has_value());
        CHECK(da.degree(*a) == 6);
        CHECK_FALSE(is_apex(complete_graph(6)).has_value());
        CHECK(is_apex(complete_graph(5)).has_value());
        CHECK(is_apex(dodecahedron_graph()) == VertexId{0});
    }

    TEST_CASE("apex_pentagon_bound")
    {
        CHECK_THROWS_AS(apex_pentagon_bound(petersen_graph()), GraphError);  // not apex
        CHECK_THROWS_AS(apex_pentagon_bound(cube_graph()), GraphError);      // girth 4
        auto d = dodecahedron_graph();
        auto b = apex_pentagon_bound(d);
        CHECK(b.count == 12);
        CHECK(b.holds);
        std::size_t apex_graphs = 0;
        for (const auto& file : {"cubic_10.g6", "cubic_12.g6", "cubic_14.g6", "cubic_g5_16.g6"})
            for (const auto& rec : catalog(file)) {
                auto gi = girth(rec.graph);
                if (!gi || *gi < 5 || !is_apex(rec.graph)) continue;
                ++apex_graphs;
                auto r = apex_pentagon_bound(rec.graph);
                CHECK(r.count >= 6);
                CHECK(r.holds);
            }
        CHECK(apex_graphs > 0);
    }

    TEST_CASE("crossing pattern")
    {
        std::array<int, 8> labels{0, 1, 0, 1, 2, 3, 2, 3};
        CHECK(matches_crossing_pattern(labels, CrossingOrder::strict));
        std::array<int, 8> rotated{1, 0, 1, 2, 3, 2, 3, 0};
        CHECK(matches_crossing_pattern(rotated, CrossingOrder::strict));
        std::array<int, 8> nested{0, 1, 1, 0, 2, 3, 3, 2};
        CHECK_FALSE(matches_crossing_pattern(nested, CrossingOrder::permissive));
    }

    TEST_CASE("is_doublecross")
    {
        CHECK_FALSE(is_doublecross(cycle_graph(6)).has_value());
        CHECK_FALSE(is_doublecross(complete_graph(4)).has_value());
        auto g = crossing_chords();
        auto w = is_doublecross(g);
        REQUIRE(w.has_value());
        CHECK(verify_doublecross(g, *w));
        auto p = is_doublecross(petersen_graph());
        if (p) CHECK(verify_doublecross(petersen_graph(), *p));
        CHECK_FALSE(p.has_value());
    }

    TEST_CASE("doublecross_pentagon_bound")
    {
        CHECK_THROWS_AS(doublecross_pentagon_bound(cube_graph()), GraphError);
        auto recs = catalog("cubic_g5_20.g6");
        // line 1799: theta-connected, Petersen-free, doublecross, not apex
        auto g = recs.at(1798).graph;
        REQUIRE(recs.at(1798).source.ends_with(":1799"));
        auto w = is_doublecross(g);
        REQUIRE(w.has_value());
        CHECK(verify_doublecross(g, *w));
        auto b = doublecross_pentagon_bound(g);
        CHECK(b.count >= 6);
        CHECK(b.holds);
    }
}
