#include "doctest.h"
#include "test_util.hpp"

#include "petcheck/catalog.hpp"
#include "petcheck/circuits.hpp"
#include "petcheck/cuts.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/io.hpp"
#include "petcheck/isomorphism.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace petcheck;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("petcheck_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter()
    {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Campaign make(const std::string& text)
{
    std::istringstream in(text);
    return parse_campaign(in, "");
}

std::string without_millis(const std::string& journal)
{
    std::istringstream in(journal);
    std::string line, out;
    while (std::getline(in, line)) {
        auto r = parse_record(line);
        r.millis = 0;
        out += format_record(r) + "\n";
    }
    return out;
}

}  // namespace

TEST_SUITE("catalog")
{
    TEST_CASE("campaign parsing")
    {
        auto c = make("name = demo\nfilter = cubic\nfilter = min_girth 6\nassertion = contains_petersen found\n"
                      "input = a.g6\njournal = j.txt\nthreads = 3\n");
        CHECK(c.name == "demo");
        REQUIRE(c.filters.size() == 2);
        CHECK(c.filters[1].arg == 6);
        CHECK(c.assertion.name == "contains_petersen");
        CHECK(c.threads == 3);
        CHECK_THROWS_AS(make("name = x\nassertion = nonsense found\njournal = j\n"), GraphError);
        CHECK_THROWS_AS(make("name = x\nfilter = min_girth\nassertion = is_interesting false\njournal = j\n"), GraphError);
        CHECK_THROWS_AS(make("name = x\ncolour = blue\n"), GraphError);
        CHECK_THROWS_AS(make("name = x\njournal = j\n"), GraphError);
    }

    TEST_CASE("journal records")
    {
        auto enc = encode_graph6(petersen_graph());
        ResultRecord r{"a.g6:3", RecordOutcome::fail, "-", 12, enc, 0};
        auto line = format_record(r);
        CHECK(line == "a.g6:3 fail - 12 " + enc);
        auto back = parse_record(line);
        CHECK(back.key == r.key);
        CHECK(back.outcome == RecordOutcome::fail);
        CHECK(back.encoding == enc);
        CHECK(back.order == 10);
        CHECK_THROWS_AS(parse_record("k fail - 5 Fw"), GraphError);
        CHECK(parse_record("k pass - 5").outcome == RecordOutcome::pass);
        CHECK_THROWS_AS(parse_record("k fail - 5"), GraphError);
        CHECK_THROWS_AS(parse_record("k maybe - 5"), GraphError);
    }

    TEST_CASE("girth-6 campaign over 14 vertices, then resume")
    {
        TempDir tmp;
        auto c = make("name = girth6-contains-petersen\nfilter = min_girth 6\nassertion = contains_petersen found\n"
                      "input = " + catalog_path("cubic_14.g6") + "\njournal = " + tmp.file("j.txt") +
                      "\nreport = " + tmp.file("r.json") + "\n");
        auto s = run_campaign(c);
        CHECK(s.evaluated == 1);
        CHECK(s.total.pass == 1);
        CHECK(s.total.fail == 0);
        CHECK(s.filtered == 508);
        CHECK(s.by_order.at(14).pass == 1);
        auto journal = slurp(c.journal);
        auto report = slurp(c.report);
        CHECK(report.find("\"pass\":1") != std::string::npos);

        auto again = run_campaign(c);
        CHECK(again.resumed == 1);
        CHECK(again.evaluated == 0);
        CHECK(again.total == s.total);
        CHECK(slurp(c.journal) == journal);
    }

    TEST_CASE("no interesting graphs below fourteen vertices")
    {
        TempDir tmp;
        auto c = make("name = none-below-14\nfilter = interesting\nassertion = is_interesting true\ninput = " +
                      catalog_path("cubic_10.g6") + "\ninput = " + catalog_path("cubic_12.g6") +
                      "\njournal = " + tmp.file("j.txt") + "\n");
        auto s = run_campaign(c);
        CHECK(s.scanned == 19 + 85);
        CHECK(s.evaluated == 0);
        CHECK(s.total == OrderCounts{});
    }

    TEST_CASE("empty catalog")
    {
        TempDir tmp;
        std::ofstream(tmp.file("empty.g6")).flush();
        auto c = make("name = empty\nassertion = is_interesting false\ninput = " + tmp.file("empty.g6") +
                      "\njournal = " + tmp.file("j.txt") + "\n");
        auto s = run_campaign(c);
        CHECK(s.scanned == 0);
        CHECK(s.total == OrderCounts{});
        CHECK(s.by_order.empty());
    }

    TEST_CASE("unreadable catalog")
    {
        TempDir tmp;
        auto c = make("name = missing\nassertion = is_interesting false\ninput = " + tmp.file("nope.g6") +
                      "\njournal = " + tmp.file("j.txt") + "\n");
        CHECK_THROWS_AS(run_campaign(c), GraphError);
    }

    TEST_CASE("fail records carry the graph and reproduce")
    {
        TempDir tmp;
        {
            std::ofstream cat(tmp.file("doctored.g6"));
            cat << encode_graph6(heawood_graph()) << "\n" << encode_graph6(dodecahedron_graph()) << "\n";
        }
        auto c = make("name = doctored\nassertion = contains_petersen none\ninput = " + tmp.file("doctored.g6") +
                      "\njournal = " + tmp.file("j.txt") + "\n");
        auto s = run_campaign(c);
        CHECK(s.total.fail == 1);
        CHECK(s.total.pass == 1);
        auto recs = read_journal(c.journal);
        REQUIRE(recs.size() == 2);
        CHECK(recs[0].outcome == RecordOutcome::fail);
        auto g = parse_graph6(recs[0].encoding);
        CHECK(is_isomorphic(g, heawood_graph()));
        CHECK(evaluate_assertion(g, c.assertion).outcome == RecordOutcome::fail);
        CHECK(recs[1].encoding.empty());
    }

    TEST_CASE("torn journal line is discarded on resume")
    {
        TempDir tmp;
        auto c = make("name = torn\nassertion = is_interesting false\ninput = " + catalog_path("cubic_10.g6") +
                      "\njournal = " + tmp.file("j.txt") + "\n");
        run_campaign(c);
        auto full = slurp(c.journal);
        auto cut = full.substr(0, full.size() - 4);  // drop the tail of the last line
        std::ofstream(c.journal, std::ios::trunc) << cut;
        auto s = run_campaign(c);
        CHECK(s.resumed == 18);
        CHECK(s.evaluated == 1);
        CHECK(without_millis(slurp(c.journal)) == without_millis(full));
    }

    TEST_CASE("parallel runs append in catalog order")
    {
        TempDir tmp;
        std::string base = "assertion = is_interesting false\ninput = " + catalog_path("cubic_12.g6") + "\n";
        auto one = make("name = a\n" + base + "journal = " + tmp.file("a.txt") + "\n");
        auto many = make("name = b\nthreads = 4\n" + base + "journal = " + tmp.file("b.txt") + "\n");
        auto s1 = run_campaign(one);
        auto s4 = run_campaign(many);
        CHECK(s1.total == s4.total);
        CHECK(without_millis(slurp(one.journal)) == without_millis(slurp(many.journal)));
    }

    TEST_CASE("witness files")
    {
        TempDir tmp;
        auto c = make("name = w\nfilter = min_girth 6\nassertion = contains_petersen found\ninput = " +
                      catalog_path("cubic_14.g6") + "\njournal = " + tmp.file("j.txt") +
                      "\nwitness_dir = " + tmp.file("w") + "\n");
        run_campaign(c);
        auto recs = read_journal(c.journal);
        REQUIRE(recs.size() == 1);
        CHECK(fs::exists(recs[0].witness));
        CHECK(slurp(recs[0].witness).find("branch 0 -> ") == 0);
    }

    TEST_CASE("minimality filter")
    {
        std::map<std::size_t, std::vector<GraphRecord>> cats;
        for (int n = 10; n <= 16; n += 2) cats[n] = catalog("cubic_" + std::to_string(n) + ".g6");
        CHECK(minimality_filter(cats, 10).minimal.empty());
        CHECK(minimality_filter(cats, 12).minimal.empty());
        auto m14 = minimality_filter(cats, 14);
        REQUIRE(m14.minimal.size() == 1);
        CHECK(is_isomorphic(m14.minimal[0].graph, heawood_graph()));
        auto m16 = minimality_filter(cats, 16);
        CHECK(m16.unknown == 0);
        for (const auto& rec : m16.minimal) {
            CHECK(girth(rec.graph).value_or(99) >= 4);
            CHECK_FALSE(find_shore(rec.graph).has_value());
        }
        MESSAGE("minimal interesting graphs on 16 vertices: " << m16.minimal.size() << " of " << m16.interesting);

        auto gap = cats;
        gap.erase(12);
        CHECK_THROWS_WITH_AS(minimality_filter(gap, 14), "missing catalog for order 12", GraphError);
        MinimalityFilter f;
        CHECK_THROWS_AS(f.feed(12, cats[12]), GraphError);
    }
}
