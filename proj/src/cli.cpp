#include "petcheck/cli.hpp"

#include "petcheck/catalog.hpp"
#include "petcheck/circuits.hpp"
#include "petcheck/containment.hpp"
#include "petcheck/cuts.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/io.hpp"
#include "petcheck/planarity.hpp"
#include "petcheck/reduction.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace petcheck {

namespace {

using nlohmann::json;

struct Target {
    std::string path;
    std::string fixture;
};

void add_target(CLI::App* sub, Target& t)
{
    sub->add_option("target", t.path, "graph file (graph6, sparse6 or adjacency list)");
    sub->add_option("--fixture", t.fixture, "bundled fixture name");
}

MultiGraph load_target(const Target& t)
{
    if (!t.fixture.empty() && !t.path.empty()) throw CLI::ValidationError("give either a file or --fixture, not both");
    if (!t.fixture.empty()) return fixture(t.fixture);
    if (t.path.empty()) throw CLI::ValidationError("no target graph given");
    return load_graph_file(t.path);
}

MultiGraph load_pattern(const std::string& name)
{
    if (name == "petersen") return petersen_graph();
    if (name == "k4") return complete_graph(4);
    if (name == "k33") return complete_bipartite_graph(3, 3);
    if (name == "k5") return complete_graph(5);
    return load_graph_file(name);
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw GraphError(std::string("bad ") + kBudgetEnv + " value '" + env + "'");
        }
    }
    return kDefaultNodeBudget;
}

std::string vertex_list(const std::vector<VertexId>& vs)
{
    std::string s;
    for (VertexId v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

json circuits_json(const std::vector<Circuit>& cs)
{
    json a = json::array();
    for (const auto& c : cs) a.push_back(c.vertices);
    return a;
}

int analyze(const MultiGraph& g, bool as_json, std::ostream& out)
{
    auto gi = girth(g);
    auto shorts = short_circuits(g);
    auto breakers = find_breakers(g);
    bool interesting = is_interesting(g);
    std::optional<bool> theta;
    try {
        theta = is_theta_connected(g);
    } catch (const BoundExceeded&) {
    }
    std::optional<Shore> shore;
    try {
        shore = find_shore(g);
    } catch (const BoundExceeded&) {
    }
    auto apex = is_apex(g);
    std::size_t pentas = pentagon_count(g);

    if (as_json) {
        json j;
        j["order"] = g.order();
        j["size"] = g.size();
        j["cubic"] = is_cubic(g);
        j["girth"] = gi ? json(*gi) : json(nullptr);
        j["short_circuits"] = circuits_json(shorts);
        j["breakers"] = circuits_json(breakers);
        j["interesting"] = interesting;
        j["theta_connected"] = theta ? json(*theta) : json(nullptr);
        j["pentagons"] = pentas;
        j["shore"] = shore ? json(shore->cut.side) : json(nullptr);
        j["apex"] = apex ? json(*apex) : json(nullptr);
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "order " << g.order() << "\n";
    out << "size " << g.size() << "\n";
    out << "cubic " << (is_cubic(g) ? "true" : "false") << "\n";
    out << "girth " << (gi ? std::to_string(*gi) : "inf") << "\n";
    out << "short_circuits " << shorts.size() << "\n";
    for (const auto& c : shorts) out << "  " << vertex_list(c.vertices) << "\n";
    out << "breakers " << breakers.size() << "\n";
    for (const auto& c : breakers) out << "  " << vertex_list(c.vertices) << "\n";
    out << "interesting " << (interesting ? "true" : "false") << "\n";
    out << "theta_connected " << (theta ? (*theta ? "true" : "false") : "unknown") << "\n";
    out << "pentagons " << pentas << "\n";
    out << "shore " << (shore ? vertex_list(shore->cut.side) : "none") << "\n";
    out << "apex " << (apex ? std::to_string(*apex) : "none") << "\n";
    return kExitOk;
}

int search(const MultiGraph& g, const MultiGraph& pattern, std::uint64_t budget, bool as_json, std::ostream& out)
{
    SearchOptions opts;
    opts.node_budget = budget;
    auto r = contains_subdivision(g, pattern, opts);
    int code = r.outcome == SearchOutcome::found ? kExitOk : r.outcome == SearchOutcome::none ? kExitNegative : kExitUnknown;
    if (as_json) {
        json j;
        j["outcome"] = outcome_name(r.outcome);
        j["nodes"] = r.nodes;
        if (r.witness) j["certificate"] = witness_certificate(pattern, *r.witness);
        out << j.dump() << "\n";
        return code;
    }
    if (r.witness)
        out << witness_certificate(pattern, *r.witness);
    else if (r.outcome == SearchOutcome::none)
        out << "none\n";
    else
        out << "unknown(budget)\n";
    return code;
}

int classify(const MultiGraph& g, std::uint64_t budget, bool as_json, std::ostream& out, std::ostream& err)
{
    if (!is_theta_connected(g)) {
        err << "classify: graph is not theta-connected\n";
        return kExitUsage;
    }
    SearchOptions opts;
    opts.node_budget = budget;
    auto t = classify_theta_connected(g, opts);
    int code = !t.consistent ? kExitUnknown : *t.consistent ? kExitOk : kExitNegative;
    auto starfish = t.starfish_available ? (t.starfish_iso ? "true" : "false") : "unavailable";
    auto consistent = t.consistent ? (*t.consistent ? "true" : "false") : "unknown";
    if (as_json) {
        json j;
        j["apex"] = t.apex ? json(*t.apex) : json(nullptr);
        j["doublecross"] = t.doublecross_decided ? json(t.doublecross.has_value()) : json(nullptr);
        if (t.doublecross) j["doublecross_removed"] = t.doublecross->removed;
        j["starfish"] = starfish;
        j["petersen"] = outcome_name(t.petersen.outcome);
        j["consistent"] = consistent;
        out << j.dump() << "\n";
        return code;
    }
    out << "apex " << (t.apex ? std::to_string(*t.apex) : "none") << "\n";
    out << "doublecross " << (!t.doublecross_decided ? "unknown" : t.doublecross ? "true" : "false") << "\n";
    out << "starfish " << starfish << "\n";
    out << "petersen " << outcome_name(t.petersen.outcome) << "\n";
    out << "consistent " << consistent << "\n";
    return code;
}

int campaign(const std::string& path, bool as_json, std::ostream& out, std::ostream& err)
{
    Campaign c;
    CampaignSummary s;
    try {
        c = load_campaign(path);
        s = run_campaign(c);
    } catch (const CampaignIoError& e) {
        err << "campaign: " << e.what() << "\n";
        return kExitUsage;
    }
    out << (as_json ? summary_json(s) + "\n" : format_summary(s));
    if (s.total.fail) return kExitNegative;
    if (s.total.unknown) return kExitUnknown;
    return kExitOk;
}

int show_fixture(const std::string& name, bool list, const std::string& format, std::ostream& out)
{
    if (list) {
        for (const auto& n : fixture_names()) out << n << "\n";
        return kExitOk;
    }
    if (name.empty()) throw CLI::ValidationError("fixture name required");
    auto g = fixture(name);
    if (format == "adj")
        out << encode_adjacency(g);
    else
        out << encode_record(g) << "\n";
    return kExitOk;
}

int validate(const MultiGraph& g, const MultiGraph& pattern, const std::string& cert, bool as_json, std::ostream& out)
{
    std::ifstream in(cert);
    if (!in) throw GraphError("cannot read certificate " + cert);
    auto w = parse_certificate(g, pattern, in);
    std::string reason;
    bool ok = validate_witness(g, pattern, w, &reason);
    if (as_json)
        out << json{{"valid", ok}, {"reason", reason}}.dump() << "\n";
    else
        out << (ok ? "valid" : "invalid: " + reason) << "\n";
    return ok ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Petersen containment toolkit for cubic graphs", "petcheck"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    std::uint64_t budget = 0;
    app.add_option("--budget", budget, std::string("search node budget (default $") + kBudgetEnv + " or 10^7)");

    Target analyze_t, search_t, classify_t, validate_t;
    auto* a = app.add_subcommand("analyze", "structural report");
    add_target(a, analyze_t);

    std::string pattern = "petersen";
    auto* s = app.add_subcommand("search", "search for a subdivision of a pattern");
    add_target(s, search_t);
    s->add_option("--pattern", pattern, "petersen, k4, k33, k5 or a graph file");

    auto* cl = app.add_subcommand("classify", "apex / doublecross / Starfish classification of a theta-connected graph");
    add_target(cl, classify_t);

    std::string config;
    auto* ca = app.add_subcommand("campaign", "run a catalog campaign");
    ca->add_option("config", config, "campaign definition file")->required();

    std::string fixture_name, format = "g6";
    bool list = false;
    auto* fx = app.add_subcommand("fixture", "print a bundled fixture");
    fx->add_option("name", fixture_name);
    fx->add_flag("--list", list, "list fixture names");
    fx->add_option("--format", format, "g6 or adj")->check(CLI::IsMember({"g6", "adj"}));

    std::string cert, vpattern = "petersen";
    auto* vw = app.add_subcommand("validate-witness", "replay a witness certificate");
    add_target(vw, validate_t);
    vw->add_option("--pattern", vpattern, "petersen, k4, k33, k5 or a graph file");
    vw->add_option("--certificate", cert, "certificate file")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "petcheck: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::uint64_t b = budget ? budget : default_budget();
        if (a->parsed()) return analyze(load_target(analyze_t), as_json, out);
        if (s->parsed()) return search(load_target(search_t), load_pattern(pattern), b, as_json, out);
        if (cl->parsed()) return classify(load_target(classify_t), b, as_json, out, err);
        if (ca->parsed()) return campaign(config, as_json, out, err);
        if (fx->parsed()) return show_fixture(fixture_name, list, format, out);
        if (vw->parsed()) return validate(load_target(validate_t), load_pattern(vpattern), cert, as_json, out);
    } catch (const CLI::Error& e) {
        err << "petcheck: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "petcheck: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace petcheck
