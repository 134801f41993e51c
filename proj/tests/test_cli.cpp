#include "doctest.h"
#include "test_util.hpp"

#include "petcheck/cli.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/io.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>
#include <sys/wait.h>

using namespace petcheck;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch()
{
    auto p = fs::temp_directory_path() / ("petcheck_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

std::string graph_file(const std::string& name, const MultiGraph& g)
{
    auto p = scratch() / (name + ".g6");
    std::ofstream(p) << encode_graph6(g) << "\n";
    return p.string();
}

int run_binary(const std::string& args)
{
    const char* bin = std::getenv("PETCHECK_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "PETCHECK_CLI not set");
    int status = std::system((std::string(bin) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("analyze")
    {
        auto r = cli({"analyze", "--fixture", "heawood"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("girth 6\n") != std::string::npos);
        CHECK(r.out.find("interesting true\n") != std::string::npos);
        CHECK(r.out.find("theta_connected true\n") != std::string::npos);

        auto j = cli({"--json", "analyze", "--fixture", "petersen"});
        REQUIRE(j.code == kExitOk);
        auto doc = nlohmann::json::parse(j.out);
        CHECK(doc["girth"] == 5);
        CHECK(doc["pentagons"] == 12);
        CHECK(doc["interesting"] == false);
        CHECK(doc["apex"].is_null());
    }

    TEST_CASE("json flag after the verb")
    {
        auto j = cli({"analyze", graph_file("k4", complete_graph(4)), "--json"});
        REQUIRE(j.code == kExitOk);
        CHECK(nlohmann::json::parse(j.out)["order"] == 4);
    }

    TEST_CASE("usage errors")
    {
        CHECK(cli({}).code == kExitUsage);
        CHECK(cli({"frobnicate"}).code == kExitUsage);
        CHECK(cli({"analyze"}).code == kExitUsage);
        CHECK(cli({"analyze", "/nonexistent/graph.g6"}).code == kExitUsage);
        CHECK(cli({"analyze", "--fixture", "nonesuch"}).code == kExitUsage);
        CHECK(cli({"fixture", "petersen", "--format", "png"}).code == kExitUsage);
        auto r = cli({"analyze", "x.g6", "--fixture", "petersen"});
        CHECK(r.code == kExitUsage);
        CHECK_FALSE(r.err.empty());
    }

    TEST_CASE("search, certificate, validate")
    {
        auto dir = scratch();
        auto r = cli({"search", "--fixture", "heawood"});
        REQUIRE(r.code == kExitOk);
        auto cert = (dir / "heawood.cert").string();
        std::ofstream(cert) << r.out;
        auto v = cli({"validate-witness", "--fixture", "heawood", "--certificate", cert});
        CHECK(v.code == kExitOk);
        CHECK(v.out == "valid\n");
        auto wrong = cli({"validate-witness", "--fixture", "petersen", "--certificate", cert});
        CHECK(wrong.code != kExitOk);
        fs::remove_all(dir);
    }

    TEST_CASE("negative and unknown outcomes")
    {
        CHECK(cli({"search", graph_file("k33", complete_bipartite_graph(3, 3)), "--pattern", "petersen"}).code == kExitNegative);
        CHECK(cli({"search", graph_file("prism3", prism_graph(3)), "--pattern", "k33"}).code == kExitNegative);
        auto u = cli({"--budget", "3", "search", "--fixture", "heawood"});
        CHECK(u.code == kExitUnknown);
        CHECK(u.out == "unknown(budget)\n");
        auto j = cli({"--json", "search", "--fixture", "petersen", "--pattern", "k4"});
        CHECK(nlohmann::json::parse(j.out)["outcome"] == "found");
    }

    TEST_CASE("classify")
    {
        auto r = cli({"classify", "--fixture", "starfish"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("starfish true\n") != std::string::npos);
        CHECK(r.out.find("consistent true\n") != std::string::npos);
        CHECK(cli({"classify", graph_file("cube", cube_graph())}).code == kExitUsage);
    }

    TEST_CASE("fixtures round trip")
    {
        auto list = cli({"fixture", "--list"});
        REQUIRE(list.code == kExitOk);
        std::istringstream names(list.out);
        std::string name;
        std::size_t n = 0;
        while (names >> name) {
            auto g6 = cli({"fixture", name});
            REQUIRE(g6.code == kExitOk);
            auto g = parse_graph6(g6.out.substr(0, g6.out.find('\n')));
            CHECK(g.order() == fixture(name).order());
            CHECK(g.size() == fixture(name).size());
            ++n;
        }
        CHECK(n == 6);
    }

    TEST_CASE("campaign verb")
    {
        auto dir = scratch();
        std::ofstream(dir / "c.conf") << "name = demo\nfilter = min_girth 6\nassertion = contains_petersen found\n"
                                      << "input = " << catalog_path("cubic_14.g6") << "\njournal = j.txt\n";
        auto r = cli({"--json", "campaign", (dir / "c.conf").string()});
        CHECK(r.code == kExitOk);
        CHECK(nlohmann::json::parse(r.out)["total"]["pass"] == 1);
        CHECK(fs::exists(dir / "j.txt"));

        std::ofstream(dir / "bad.conf") << "name = bad\nassertion = contains_petersen none\ninput = "
                                        << catalog_path("cubic_14.g6") << "\nfilter = min_girth 6\njournal = k.txt\n";
        CHECK(cli({"campaign", (dir / "bad.conf").string()}).code == kExitNegative);
        CHECK(cli({"campaign", (dir / "missing.conf").string()}).code == kExitUsage);
        fs::remove_all(dir);
    }

    TEST_CASE("binary exit codes")
    {
        CHECK(run_binary("analyze --fixture petersen") == kExitOk);
        CHECK(run_binary("search --fixture dodecahedron") == kExitNegative);
        CHECK(run_binary("--budget 3 search --fixture heawood") == kExitUnknown);
        CHECK(run_binary("analyze /nonexistent.g6") == kExitUsage);
        CHECK(run_binary("analyze --fixture petersen stray") == kExitUsage);
        int status = std::system(("PETCHECK_NODE_BUDGET=3 " + std::string(std::getenv("PETCHECK_CLI")) +
                                  " search --fixture heawood >/dev/null 2>&1").c_str());
        CHECK(WEXITSTATUS(status) == kExitUnknown);
    }
}
