#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

#include "petcheck/circuits.hpp"
#include "petcheck/containment.hpp"
#include "petcheck/cuts.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/planarity.hpp"
#include "petcheck/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <random>
#include <sstream>

using namespace petcheck;

namespace {

constexpr int kTrials = 10'000;

std::vector<VertexId> members(std::uint64_t mask, std::size_t n)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

struct Known {
    MultiGraph host;
    MultiGraph pattern;
    SubdivisionWitness witness;
};

std::vector<Known> witness_pool()
{
    std::vector<Known> pool;
    auto add = [&](const MultiGraph& host, const MultiGraph& pattern) {
        auto r = contains_subdivision(host, pattern);
        if (r.witness) pool.push_back({host, pattern, *r.witness});
    };
    add(heawood_graph(), petersen_graph());
    add(petersen_graph(), petersen_graph());
    add(figure2_graph(), petersen_graph());
    for (const auto& rec : catalog("cubic_10.g6")) {
        add(rec.graph, complete_graph(4));
        add(rec.graph, complete_bipartite_graph(3, 3));
    }
    for (const auto& rec : catalog("cubic_12.g6")) add(rec.graph, petersen_graph());
    return pool;
}

}  // namespace

TEST_SUITE("properties")
{
    TEST_CASE("cut submodularity")
    {
        std::mt19937_64 rng(101);
        for (int t = 0; t < kTrials; ++t) {
            std::size_t n = 2 + rng() % 11;
            auto g = oracle::random_multigraph(rng, n, rng() % (3 * n));
            std::uint64_t full = (std::uint64_t{1} << n) - 1;
            std::uint64_t x = rng() & full, y = rng() & full;
            auto d = [&](std::uint64_t m) { return edge_cut(g, members(m, n)).boundary.size(); };
            CHECK(d(x | y) + d(x & y) <= d(x) + d(y));
            CHECK(d(x) == static_cast<std::size_t>(oracle::cut_size(oracle::plain(g), x)));
        }
    }

    TEST_CASE("boundary symmetry")
    {
        std::mt19937_64 rng(102);
        for (int t = 0; t < kTrials; ++t) {
            std::size_t n = 1 + rng() % 12;
            auto g = oracle::random_multigraph(rng, n, rng() % (3 * n + 1));
            std::uint64_t full = (std::uint64_t{1} << n) - 1;
            std::uint64_t x = rng() & full;
            auto a = edge_cut(g, members(x, n));
            auto b = edge_cut(g, members(full & ~x, n));
            CHECK(a.boundary == b.boundary);
            for (EdgeId e : a.boundary) CHECK((x >> g.edge(e).u & 1) != (x >> g.edge(e).v & 1));
        }
    }

    TEST_CASE("Euler identity on planar embeddings")
    {
        std::mt19937_64 rng(103);
        int planar = 0;
        while (planar < kTrials) {
            std::size_t n = 3 + rng() % 12;
            auto g = oracle::random_simple(rng, n, 2.6 / static_cast<double>(n));
            auto emb = planar_embedding(g);
            if (!emb) continue;
            ++planar;
            auto fs = faces(g, *emb);
            auto labels = component_labels(g);
            std::set<VertexId> comps;
            std::size_t touched = 0;
            for (VertexId v : g.vertices())
                if (g.degree(v) > 0) {
                    comps.insert(labels[v]);
                    ++touched;
                }
            long long euler = static_cast<long long>(touched) - static_cast<long long>(g.size()) +
                              static_cast<long long>(fs.size());
            CHECK(euler == 2 * static_cast<long long>(comps.size()));
            // every edge is walked exactly twice, once per side
            std::map<EdgeId, int> uses;
            for (const auto& f : fs)
                for (EdgeId e : f.edges) ++uses[e];
            CHECK(uses.size() == g.size());
            for (auto [e, k] : uses) CHECK(k == 2);
        }
        CHECK(planar == kTrials);
    }

    TEST_CASE("witness replay")
    {
        auto pool = witness_pool();
        REQUIRE(pool.size() > 20);
        std::mt19937_64 rng(104);
        std::size_t rejected = 0;
        for (int t = 0; t < kTrials; ++t) {
            const auto& k = pool[rng() % pool.size()];
            std::size_t n = k.host.vertex_bound();
            std::vector<VertexId> vmap(n);
            std::iota(vmap.begin(), vmap.end(), 0);
            std::shuffle(vmap.begin(), vmap.end(), rng);
            auto old_edges = k.host.edges();
            std::vector<EdgeId> order(old_edges.begin(), old_edges.end());
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<EdgeId> emap(k.host.edge_bound(), kNoEdge);
            std::vector<std::pair<VertexId, VertexId>> es;
            for (EdgeId e : order) {
                emap[e] = static_cast<EdgeId>(es.size());
                es.emplace_back(vmap[k.host.edge(e).u], vmap[k.host.edge(e).v]);
            }
            auto host = graph_from_edges(n, es);
            auto w = relabel_witness(k.witness, vmap, emap);
            std::string why;
            CHECK_MESSAGE(validate_witness(host, k.pattern, w, &why), why);

            std::istringstream cert(witness_certificate(k.pattern, w));
            CHECK(validate_witness(host, k.pattern, parse_certificate(host, k.pattern, cert)));

            std::vector<EdgeId> used;
            for (const auto& p : w.path_map) used.insert(used.end(), p.edges.begin(), p.edges.end());
            auto broken = host;
            broken.remove_edge(used[rng() % used.size()]);
            bool ok = validate_witness(broken, k.pattern, w);
            CHECK_FALSE(ok);
            rejected += !ok;
        }
        CHECK(rejected == static_cast<std::size_t>(kTrials));
    }

    TEST_CASE("theta-connectivity: definition and shore form agree")
    {
        std::size_t graphs = 0, theta = 0;
        for (const auto& file : {"cubic_10.g6", "cubic_12.g6", "cubic_14.g6", "cubic_g5_16.g6"})
            for (const auto& rec : catalog(file)) {
                auto gi = girth(rec.graph);
                if (!gi || *gi < 5) continue;
                ++graphs;
                bool direct = theta_connected_direct(rec.graph);
                INFO(rec.source);
                CHECK(direct == theta_connected_via_shores(rec.graph));
                CHECK(direct == is_theta_connected(rec.graph));
                theta += direct;
            }
        MESSAGE("girth>=5 graphs checked: " << graphs << ", theta-connected: " << theta);
        CHECK(graphs == 1 + 2 + 9 + 49);
        CHECK(theta > 0);
    }
}
