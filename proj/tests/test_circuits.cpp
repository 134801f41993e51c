#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

#include "petcheck/circuits.hpp"
#include "petcheck/cuts.hpp"
#include "petcheck/fixtures.hpp"

#include <random>

using namespace petcheck;

namespace {

std::vector<std::vector<int>> edge_sets(const MultiGraph& g, const std::vector<Circuit>& cs)
{
    auto p = oracle::plain(g);
    std::map<EdgeId, int> idx;
    for (std::size_t i = 0; i < p.ids.size(); ++i) idx[p.ids[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    for (const auto& c : cs) {
        std::vector<int> s;
        for (EdgeId e : c.edges) s.push_back(idx[e]);
        std::sort(s.begin(), s.end());
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("circuits")
{
    TEST_CASE("girth")
    {
        CHECK(girth(petersen_graph()) == 5u);
        CHECK(girth(heawood_graph()) == 6u);
        std::vector<std::pair<VertexId, VertexId>> tree{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
        CHECK_FALSE(girth(graph_from_edges(5, tree)).has_value());
        MultiGraph l(1);
        l.add_edge(0, 0);
        CHECK(girth(l) == 1u);
    }

    TEST_CASE("circuits_up_to against the subset oracle")
    {
        auto p = petersen_graph();
        auto five = circuits_up_to(p, 5);
        CHECK(five.size() == 12);
        for (const auto& c : five) CHECK(c.length() == 5);
        CHECK(edge_sets(p, five) == oracle::circuits(p, 5));

        auto k4 = complete_graph(4);
        auto cs = circuits_up_to(k4, 4);
        std::size_t tri = 0, quad = 0;
        for (const auto& c : cs) (c.length() == 3 ? tri : quad)++;
        CHECK(tri == 4);
        CHECK(quad == 3);
        CHECK(edge_sets(k4, cs) == oracle::circuits(k4, 4));

        CHECK(circuits_up_to(heawood_graph(), 5).empty());
    }

    TEST_CASE("circuits of random multigraphs match the oracle")
    {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 300; ++t) {
            auto g = oracle::random_multigraph(rng, 1 + rng() % 7, rng() % 10);
            int n = static_cast<int>(g.order());
            CHECK(edge_sets(g, circuits_up_to(g, n)) == oracle::circuits(g, n));
        }
    }

    TEST_CASE("girth equals the shortest enumerated circuit on graphs up to 12 vertices")
    {
        for (const auto& rec : small_cubic()) {
            auto gi = girth(rec.graph);
            auto cs = circuits_up_to(rec.graph, rec.graph.order());
            REQUIRE(!cs.empty());
            std::size_t best = cs.front().length();
            for (const auto& c : cs) best = std::min(best, c.length());
            CHECK(gi == best);
        }
        std::mt19937_64 rng(9);
        for (int t = 0; t < 300; ++t) {
            auto g = oracle::random_multigraph(rng, 1 + rng() % 8, rng() % 10);
            auto a = girth(g);
            auto b = oracle::girth(g);
            CHECK(a.has_value() == b.has_value());
            if (a && b) CHECK(static_cast<int>(*a) == *b);
        }
    }

    TEST_CASE("short circuits and loops")
    {
        CHECK(short_circuits(heawood_graph()).empty());
        CHECK(short_circuits(petersen_graph()).size() == 12);
        MultiGraph l(3);
        l.add_edge(0, 0);
        l.add_edge(0, 1);
        l.add_edge(1, 2);
        auto sc = short_circuits(l);
        REQUIRE(sc.size() == 1);
        CHECK(sc[0].length() == 1);
    }

    TEST_CASE("meets")
    {
        auto p = petersen_graph();
        auto outer = circuit_through(p, {0, 1, 2, 3, 4});
        auto inner = circuit_through(p, {5, 7, 9, 6, 8});
        CHECK(meets(outer, outer));
        CHECK_FALSE(meets(outer, inner));
        auto other = circuit_through(p, {0, 1, 6, 8, 5});
        CHECK(meets(outer, other));
    }

    TEST_CASE("find_breakers")
    {
        auto k4 = complete_graph(4);
        CHECK(short_circuits(k4).size() == 7);
        CHECK(find_breakers(k4).size() == 7);
        CHECK(find_breakers(petersen_graph()).empty());
        CHECK(find_breakers(heawood_graph()).empty());
    }

    TEST_CASE("is_interesting")
    {
        CHECK(is_interesting(heawood_graph()));
        CHECK_FALSE(is_interesting(petersen_graph()));
        CHECK_FALSE(is_interesting(complete_graph(4)));
    }

    TEST_CASE("pentagon_count")
    {
        CHECK(pentagon_count(petersen_graph()) == 12);
        CHECK(pentagon_count(heawood_graph()) == 0);
        CHECK(pentagon_count(cycle_graph(5)) == 1);
    }

    TEST_CASE("breakers replay and girth-6 graphs have none")
    {
        for (const auto& file : {"cubic_10.g6", "cubic_12.g6", "cubic_14.g6"})
            for (const auto& rec : catalog(file)) {
                auto sc = short_circuits(rec.graph);
                auto br = find_breakers(rec.graph);
                for (const auto& b : br) {
                    CHECK(b.length() <= 5);
                    for (const auto& c : sc) CHECK(meets(b, c));
                }
                auto gi = girth(rec.graph);
                if (!gi || *gi >= 6) {
                    CHECK(sc.empty());
                    CHECK(br.empty());
                }
            }
    }

    TEST_CASE("pentagons of interesting theta-connected graphs")
    {
        std::size_t seen = 0;
        for (const auto& file : {"cubic_10.g6", "cubic_12.g6", "cubic_14.g6", "cubic_g5_16.g6", "cubic_g5_18.g6"})
            for (const auto& rec : catalog(file)) {
                if (!is_interesting(rec.graph) || !is_theta_connected(rec.graph)) continue;
                ++seen;
                auto ps = pentagons(rec.graph);
                CHECK(ps.size() <= 5);
                for (std::size_t i = 0; i < ps.size(); ++i)
                    for (std::size_t j = i + 1; j < ps.size(); ++j) {
                        auto a = ps[i].edge_set(), b = ps[j].edge_set();
                        std::vector<EdgeId> common;
                        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                        CHECK(common.size() <= 1);
                    }
            }
        CHECK(seen >= 1);
    }

    TEST_CASE("invalid circuits are rejected")
    {
        auto p = petersen_graph();
        CHECK_THROWS_AS(circuit_through(p, {0, 2, 4}), GraphError);
        Circuit c = circuit_through(p, {0, 1, 2, 3, 4});
        CHECK(is_valid_circuit(p, c));
        c.edges[0] = c.edges[1];
        CHECK_FALSE(is_valid_circuit(p, c));
    }
}
