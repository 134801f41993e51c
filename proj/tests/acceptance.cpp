// Acceptance runner: one PASS/FAIL line per criterion.
//   petcheck_acceptance [--criterion N]...
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "oracles.hpp"
#include "test_util.hpp"

#include "petcheck/circuits.hpp"
#include "petcheck/containment.hpp"
#include "petcheck/covers.hpp"
#include "petcheck/cuts.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/isomorphism.hpp"
#include "petcheck/planarity.hpp"
#include "petcheck/reduction.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace petcheck;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << "[" << what << "] ";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool girth_at_least(const MultiGraph& g, std::size_t k)
{
    auto gi = girth(g);
    return !gi || *gi >= k;
}

void flagship(Verdict& v)
{
    auto t0 = std::chrono::steady_clock::now();
    std::map<std::size_t, std::size_t> per_order;
    std::size_t unknown = 0, invalid = 0;
    for (const auto& file : {"cubic_14.g6", "cubic_g5_16.g6", "cubic_g5_18.g6", "cubic_g5_20.g6"})
        for (const auto& rec : catalog(file)) {
            if (!girth_at_least(rec.graph, 6) || !is_connected(rec.graph)) continue;
            auto r = contains_petersen(rec.graph);
            if (r.outcome != SearchOutcome::found) {
                ++unknown;
                v.require(false, rec.source + " " + outcome_name(r.outcome));
                continue;
            }
            if (!validate_witness(rec.graph, petersen_graph(), *r.witness)) {
                ++invalid;
                v.require(false, rec.source + " invalid witness");
            }
            ++per_order[rec.graph.order()];
        }
    double secs = seconds_since(t0);
    v.require(per_order.size() == 4, "orders 14,16,18,20 all present");
    v.require(unknown == 0 && invalid == 0, "every graph has a verified witness");
    v.require(secs < 600, "under ten minutes");
    for (auto [n, k] : per_order) v.detail << "n=" << n << ":" << k << " ";
    v.detail << "verified, " << secs << "s";
}

void unique_at_14(Verdict& v)
{
    std::vector<MultiGraph> hits;
    for (const auto& rec : catalog("cubic_14.g6"))
        if (is_interesting(rec.graph)) hits.push_back(rec.graph);
    v.require(hits.size() == 1, "exactly one interesting graph");
    if (!hits.empty()) {
        v.require(is_isomorphic(hits[0], heawood_graph()), "isomorphic to Heawood");
        v.require(girth(hits[0]) == 6u, "girth 6");
    }
    v.detail << hits.size() << " interesting of " << catalog("cubic_14.g6").size();
}

void none_below_14(Verdict& v)
{
    for (const auto& file : {"cubic_10.g6", "cubic_12.g6"}) {
        auto recs = catalog(file);
        std::size_t k = 0;
        for (const auto& rec : recs) k += is_interesting(rec.graph);
        v.require(k == 0, std::string(file) + " has no interesting graph");
        v.detail << file << ": " << k << "/" << recs.size() << " ";
    }
}

void apex_bound(Verdict& v)
{
    std::size_t apex = 0, min_count = 99;
    for (const auto& file : {"cubic_10.g6", "cubic_12.g6", "cubic_14.g6", "cubic_16.g6"})
        for (const auto& rec : catalog(file)) {
            if (!girth_at_least(rec.graph, 5) || !is_apex(rec.graph)) continue;
            auto b = apex_pentagon_bound(rec.graph);
            ++apex;
            min_count = std::min(min_count, b.count);
            v.require(b.holds && b.count == pentagon_count(rec.graph), rec.source);
        }
    v.detail << "corpus: " << apex << " apex graphs, min pentagons " << min_count << "; ";
    auto p = petersen_graph();
    v.detail << "Petersen: pentagons " << pentagon_count(p) << ", apex "
             << (is_apex(p) ? "yes" : "no") << "; ";
    try {
        auto b = apex_pentagon_bound(p);
        v.require(b.count == 12 && b.holds, "Petersen reports (12, true)");
    } catch (const GraphError& e) {
        v.require(false, std::string("Petersen reports (12, true): ") + e.what());
    }
}

void interesting_theta(Verdict& v)
{
    std::size_t found = 0, max_pent = 0;
    for (const auto& file : {"cubic_10.g6", "cubic_12.g6", "cubic_14.g6", "cubic_16.g6", "cubic_g5_18.g6",
                             "cubic_g5_20.g6"})
        for (const auto& rec : catalog(file)) {
            if (!girth_at_least(rec.graph, 5) || !is_interesting(rec.graph) || !is_theta_connected(rec.graph))
                continue;
            ++found;
            auto ps = pentagons(rec.graph);
            max_pent = std::max(max_pent, ps.size());
            v.require(ps.size() <= 5, rec.source + " pentagon count");
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = i + 1; j < ps.size(); ++j) {
                    std::size_t shared = 0;
                    for (EdgeId e : ps[i].edges) shared += std::count(ps[j].edges.begin(), ps[j].edges.end(), e);
                    v.require(shared <= 1, rec.source + " pentagon pair");
                }
        }
    v.require(found > 0, "at least one graph examined");
    v.detail << found << " interesting theta-connected graphs, max pentagons " << max_pent;
}

void dodeca_apex(Verdict& v)
{
    auto g = dodeca_apex_graph();
    auto r = contains_petersen(g);
    v.require(girth(g) == 6u, "girth 6");
    v.require(min_degree(g) == 3, "minimum degree 3");
    v.require(is_apex(g).has_value(), "apex");
    v.require(r.outcome == SearchOutcome::none, "Petersen-free");
    v.require(r.nodes < kDefaultNodeBudget, "search exhaustive within budget");
    v.detail << "apex vertex " << is_apex(g).value_or(kNoVertex) << ", " << r.nodes << " search nodes";
}

void figure2(Verdict& v)
{
    auto vs = figure2_variants();
    v.require(!vs.empty(), "variants exist");
    for (const auto& var : vs) {
        auto b = build_figure2(var);
        auto r = contains_petersen(b.g);
        v.require(r.outcome == SearchOutcome::found && validate_witness(b.g, petersen_graph(), *r.witness),
                  "variant contains Petersen");
    }
    v.detail << vs.size() << " consistent variants, all contain Petersen";
}

void oracle_equivalence(Verdict& v)
{
    std::size_t compared = 0, disagree = 0;
    for (const auto& rec : small_cubic())
        for (auto [pat, g] : {std::pair{oracle::Pattern::k4, complete_graph(4)},
                              std::pair{oracle::Pattern::k33, complete_bipartite_graph(3, 3)},
                              std::pair{oracle::Pattern::petersen, petersen_graph()}}) {
            auto r = contains_subdivision(rec.graph, g);
            bool found = r.outcome == SearchOutcome::found;
            bool ok = r.outcome != SearchOutcome::unknown && found == oracle::contains(rec.graph, pat) &&
                      (!found || validate_witness(rec.graph, g, *r.witness));
            if (!ok) {
                ++disagree;
                v.require(false, rec.source);
            }
            ++compared;
        }
    v.detail << compared << " comparisons, " << disagree << " disagreements";
}

void property_suites(Verdict& v)
{
    doctest::Context ctx;
    ctx.setOption("test-suite", "properties");
    ctx.setOption("no-breaks", true);
    ctx.setOption("minimal", true);
    int rc = ctx.run();
    v.require(rc == 0, "property suites");
    v.detail << "doctest suite 'properties' rc=" << rc;
}

void covers(Verdict& v)
{
    std::mt19937_64 rng(7);
    std::size_t trials = 0, mismatches = 0, admissible = 0;
    for (; trials < 2000; ++trials) {
        auto g = oracle::random_multigraph(rng, 1 + rng() % 10, rng() % 16);
        EdgeWeighting w;
        for (EdgeId e : g.edges()) w[e] = static_cast<long long>(rng() % 5);
        bool a = is_admissible(g, w);
        admissible += a;
        mismatches += a != oracle::admissible(g, w);
    }
    v.require(mismatches == 0, "admissibility matches brute force");
    v.detail << trials << " weightings (" << admissible << " admissible), " << mismatches << " mismatches; ";

    auto p = petersen_graph();
    auto two = constant_weighting(p, 2);
    auto r = circuit_cover_exists(p, two);
    v.require(r.outcome == SearchOutcome::found && validate_circuit_cover(p, two, *r.cover), "Petersen p=2 cover");

    auto bad = find_uncoverable_weighting(p);
    v.require(bad.has_value(), "uncoverable weighting found");
    if (bad) {
        v.require(is_admissible(p, *bad) && oracle::admissible(p, *bad), "uncoverable weighting admissible");
        v.require(circuit_cover_exists(p, *bad).outcome == SearchOutcome::none, "uncoverable weighting has no cover");
        v.detail << "uncoverable weighting ";
        for (EdgeId e : p.edges()) v.detail << bad->at(e);
    }
}

void five_covers(Verdict& v)
{
    std::size_t ok = 0, skipped = 0;
    auto check = [&](const MultiGraph& g, const std::string& name) {
        auto r = five_eulerian_cover(g);
        bool good = r.outcome == SearchOutcome::found && validate_five_cover(g, *r.cover);
        v.require(good, name);
        ok += good;
    };
    check(complete_graph(4), "K4");
    check(complete_bipartite_graph(3, 3), "K3,3");
    check(prism_graph(3), "prism");
    for (const auto& rec : small_cubic()) {
        if (!is_two_edge_connected(rec.graph) || contains_petersen(rec.graph).outcome != SearchOutcome::none) {
            ++skipped;
            continue;
        }
        check(rec.graph, rec.source);
    }
    v.detail << ok << " covers verified, " << skipped << " graphs outside the hypothesis";
}

const std::map<int, std::pair<std::string, std::function<void(Verdict&)>>>& criteria()
{
    static const std::map<int, std::pair<std::string, std::function<void(Verdict&)>>> table{
        {1, {"girth-6 graphs on 14..20 vertices contain Petersen", flagship}},
        {2, {"unique interesting graph on 14 vertices", unique_at_14}},
        {3, {"no interesting graph on 10 or 12 vertices", none_below_14}},
        {4, {"apex pentagon bound", apex_bound}},
        {5, {"pentagons of interesting theta-connected graphs", interesting_theta}},
        {6, {"dodeca_apex is Petersen-free", dodeca_apex}},
        {7, {"figure2 variants contain Petersen", figure2}},
        {8, {"containment agrees with brute force", oracle_equivalence}},
        {9, {"property suites", property_suites}},
        {10, {"admissible weightings and circuit covers", covers}},
        {11, {"five Eulerian covers", five_covers}},
    };
    return table;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance checks"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion number (repeatable; default all)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);
    if (selected.empty())
        for (const auto& [n, c] : criteria()) selected.push_back(n);

    bool all = true;
    for (int n : selected) {
        const auto& [title, fn] = criteria().at(n);
        Verdict v;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << n << " " << (v.pass ? "PASS" : "FAIL") << ": " << title << ": " << v.detail.str()
                  << " (" << seconds_since(t0) << "s)" << std::endl;
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
