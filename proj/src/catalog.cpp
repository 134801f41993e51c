#include "petcheck/catalog.hpp"

#include "petcheck/circuits.hpp"
#include "petcheck/covers.hpp"
#include "petcheck/cuts.hpp"
#include "petcheck/fixtures.hpp"
#include "petcheck/io.hpp"
#include "petcheck/planarity.hpp"
#include "petcheck/reduction.hpp"

#include "json.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace petcheck {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

const std::set<std::string> kFiltersWithArg = {"min_girth", "max_girth", "min_order", "max_order"};

std::string resolve(const std::string& base, const std::string& p)
{
    fs::path path(p);
    if (path.is_absolute() || base.empty()) return p;
    return (fs::path(base) / path).lexically_normal().string();
}

RecordOutcome compare(bool ok) { return ok ? RecordOutcome::pass : RecordOutcome::fail; }

bool parse_bool(const std::string& s)
{
    if (s == "true") return true;
    if (s == "false") return false;
    throw GraphError("expected true or false, got '" + s + "'");
}

std::string sanitize(const std::string& key)
{
    std::string out;
    for (char ch : key) out += std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' ? ch : '_';
    return out;
}

}  // namespace

const std::vector<std::string>& filter_names()
{
    static const std::vector<std::string> names = {"cubic",       "connected", "two_edge_connected", "min_girth",
                                                   "max_girth",   "min_order", "max_order",          "interesting",
                                                   "theta_connected", "apex",  "petersen_free"};
    return names;
}

const std::vector<std::string>& assertion_names()
{
    static const std::vector<std::string> names = {"contains_petersen", "is_interesting",  "five_eulerian_cover",
                                                   "theta_consistent",  "apex_pentagon_bound", "reduction_sound"};
    return names;
}

Campaign parse_campaign(std::istream& in, const std::string& base_dir)
{
    Campaign c;
    std::string line;
    std::size_t lineno = 0;
    bool have_assertion = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw GraphError("campaign line " + std::to_string(lineno) + ": expected key = value");
        auto key = trim(t.substr(0, eq));
        auto value = trim(t.substr(eq + 1));
        auto at = [&](const std::string& msg) { return GraphError("campaign line " + std::to_string(lineno) + ": " + msg); };
        if (key == "name") {
            c.name = value;
        } else if (key == "filter") {
            auto w = words(value);
            if (w.empty()) throw at("empty filter");
            auto& names = filter_names();
            if (std::find(names.begin(), names.end(), w[0]) == names.end()) throw at("unknown filter " + w[0]);
            FilterSpec f{w[0], 0};
            if (kFiltersWithArg.count(w[0])) {
                if (w.size() != 2) throw at("filter " + w[0] + " takes one integer");
                try {
                    f.arg = std::stoll(w[1]);
                } catch (const std::exception&) {
                    throw at("bad integer " + w[1]);
                }
            } else if (w.size() != 1) {
                throw at("filter " + w[0] + " takes no argument");
            }
            c.filters.push_back(f);
        } else if (key == "assertion") {
            auto w = words(value);
            if (w.size() != 2) throw at("assertion needs an operation and an expected outcome");
            auto& names = assertion_names();
            if (std::find(names.begin(), names.end(), w[0]) == names.end()) throw at("unknown assertion " + w[0]);
            c.assertion = {w[0], w[1]};
            have_assertion = true;
        } else if (key == "input") {
            c.inputs.push_back(resolve(base_dir, value));
        } else if (key == "journal") {
            c.journal = resolve(base_dir, value);
        } else if (key == "report") {
            c.report = resolve(base_dir, value);
        } else if (key == "witness_dir") {
            c.witness_dir = resolve(base_dir, value);
        } else if (key == "threads") {
            c.threads = static_cast<unsigned>(std::max(1LL, std::stoll(value)));
        } else if (key == "budget") {
            c.node_budget = std::stoull(value);
        } else {
            throw at("unknown key " + key);
        }
    }
    if (c.name.empty()) throw GraphError("campaign has no name");
    if (!have_assertion) throw GraphError("campaign has no assertion");
    if (c.journal.empty()) throw GraphError("campaign has no journal");
    return c;
}

Campaign load_campaign(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw GraphError("cannot read campaign " + path);
    return parse_campaign(in, fs::path(path).parent_path().string());
}

bool passes_filter(const MultiGraph& g, const FilterSpec& f, std::uint64_t node_budget)
{
    const auto& n = f.name;
    if (n == "cubic") return is_cubic(g);
    if (n == "connected") return is_connected(g);
    if (n == "two_edge_connected") return is_two_edge_connected(g);
    if (n == "min_girth") {
        auto gi = girth(g);
        return !gi || static_cast<long long>(*gi) >= f.arg;
    }
    if (n == "max_girth") {
        auto gi = girth(g);
        return gi && static_cast<long long>(*gi) <= f.arg;
    }
    if (n == "min_order") return static_cast<long long>(g.order()) >= f.arg;
    if (n == "max_order") return static_cast<long long>(g.order()) <= f.arg;
    if (n == "interesting") return is_interesting(g);
    if (n == "theta_connected") return is_theta_connected(g);
    if (n == "apex") return is_apex(g).has_value();
    if (n == "petersen_free") {
        SearchOptions o;
        o.node_budget = node_budget;
        return contains_petersen(g, o).outcome == SearchOutcome::none;
    }
    throw GraphError("unknown filter " + n);
}

const char* record_outcome_name(RecordOutcome o)
{
    switch (o) {
    case RecordOutcome::pass: return "pass";
    case RecordOutcome::fail: return "fail";
    case RecordOutcome::unknown: return "unknown";
    }
    return "?";
}

RecordOutcome parse_record_outcome(const std::string& s)
{
    if (s == "pass") return RecordOutcome::pass;
    if (s == "fail") return RecordOutcome::fail;
    if (s == "unknown") return RecordOutcome::unknown;
    throw GraphError("bad record outcome '" + s + "'");
}

Evaluation evaluate_assertion(const MultiGraph& g, const AssertionSpec& a, std::uint64_t node_budget)
{
    SearchOptions opts;
    opts.node_budget = node_budget;
    Evaluation ev;
    const auto& n = a.name;
    if (n == "contains_petersen") {
        if (a.expected != "found" && a.expected != "none") throw GraphError("contains_petersen expects found or none");
        auto r = contains_petersen(g, opts);
        if (r.outcome == SearchOutcome::unknown) return ev;
        if (r.witness) {
            if (!validate_witness(g, petersen_graph(), *r.witness)) {
                ev.outcome = RecordOutcome::fail;
                return ev;
            }
            ev.witness = witness_certificate(petersen_graph(), *r.witness);
        }
        ev.outcome = compare(a.expected == outcome_name(r.outcome));
        return ev;
    }
    if (n == "is_interesting") {
        ev.outcome = compare(is_interesting(g) == parse_bool(a.expected));
        return ev;
    }
    if (n == "five_eulerian_cover") {
        if (a.expected != "found") throw GraphError("five_eulerian_cover expects found");
        FiveCoverResult r;
        try {
            r = five_eulerian_cover(g, node_budget);
        } catch (const GraphError&) {
            ev.outcome = RecordOutcome::fail;
            return ev;
        }
        if (r.outcome == SearchOutcome::unknown) return ev;
        ev.outcome = compare(r.cover && validate_five_cover(g, *r.cover));
        return ev;
    }
    if (n == "theta_consistent") {
        bool want = parse_bool(a.expected);
        if (!is_theta_connected(g)) {
            ev.outcome = RecordOutcome::fail;
            return ev;
        }
        auto t = classify_theta_connected(g, opts);
        if (!t.consistent) return ev;
        ev.outcome = compare(*t.consistent == want);
        return ev;
    }
    if (n == "apex_pentagon_bound") {
        bool want = parse_bool(a.expected);
        try {
            ev.outcome = compare(apex_pentagon_bound(g).holds == want);
        } catch (const GraphError&) {
            ev.outcome = RecordOutcome::fail;
        }
        return ev;
    }
    if (n == "reduction_sound") {
        bool want = parse_bool(a.expected);
        if (!is_interesting(g)) {
            ev.outcome = RecordOutcome::fail;
            return ev;
        }
        auto r = reduction_pipeline(g, opts);
        bool ok = false;
        switch (r.outcome) {
        case PipelineOutcome::reduced: ok = r.step && step_is_sound(*r.step); break;
        case PipelineOutcome::petersen_witness:
            ok = r.petersen.witness && validate_witness(g, petersen_graph(), *r.petersen.witness);
            break;
        case PipelineOutcome::theta_terminal:
            if (!r.theta || !r.theta->consistent) return ev;
            ok = *r.theta->consistent;
            break;
        case PipelineOutcome::stuck: ok = false; break;
        }
        ev.outcome = compare(ok == want);
        return ev;
    }
    throw GraphError("unknown assertion " + n);
}

std::string format_record(const ResultRecord& r)
{
    std::string out = r.key + " " + record_outcome_name(r.outcome) + " " + (r.witness.empty() ? "-" : r.witness) + " " +
                      std::to_string(r.millis);
    if (r.outcome == RecordOutcome::fail) out += " " + r.encoding;
    return out;
}

ResultRecord parse_record(const std::string& line)
{
    auto w = words(line);
    if (w.size() < 4 || w.size() > 5) throw GraphError("malformed journal line: " + line);
    ResultRecord r;
    r.key = w[0];
    r.outcome = parse_record_outcome(w[1]);
    r.witness = w[2];
    try {
        r.millis = std::stoll(w[3]);
    } catch (const std::exception&) {
        throw GraphError("malformed journal line: " + line);
    }
    if (r.outcome == RecordOutcome::fail) {
        if (w.size() != 5) throw GraphError("fail record without encoding: " + line);
        r.encoding = w[4];
        r.order = parse_graph6(r.encoding).order();
    } else if (w.size() != 4) {
        throw GraphError("malformed journal line: " + line);
    }
    return r;
}

std::vector<ResultRecord> read_journal(const std::string& path)
{
    std::vector<ResultRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream lines(content);
    std::string line;
    bool complete_tail = content.empty() || content.back() == '\n';
    std::vector<std::string> all;
    while (std::getline(lines, line))
        if (!trim(line).empty()) all.push_back(line);
    for (std::size_t i = 0; i < all.size(); ++i) {
        // A torn final line from an interrupted run is dropped.
        if (i + 1 == all.size() && !complete_tail) break;
        out.push_back(parse_record(all[i]));
    }
    return out;
}

CampaignSummary run_campaign(const Campaign& c)
{
    CampaignSummary s;
    s.name = c.name;
    for (const auto& p : c.inputs)
        if (!std::ifstream(p)) throw GraphError("cannot read catalog " + p);

    auto journaled = read_journal(c.journal);
    std::map<std::string, ResultRecord> done;
    for (auto& r : journaled) done[r.key] = r;
    {
        // Rewrite when the previous run left a torn line.
        std::ifstream in(c.journal);
        std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (!content.empty() && content.back() != '\n') {
            std::ofstream out(c.journal, std::ios::trunc);
            for (const auto& r : journaled) out << format_record(r) << '\n';
            if (!out) throw CampaignIoError("cannot rewrite journal " + c.journal, 0);
        }
    }
    std::size_t durable = journaled.size();

    auto count = [&](std::size_t order, RecordOutcome o) {
        auto& oc = s.by_order[order];
        auto& t = s.total;
        switch (o) {
        case RecordOutcome::pass: ++oc.pass, ++t.pass; break;
        case RecordOutcome::fail: ++oc.fail, ++t.fail; break;
        case RecordOutcome::unknown: ++oc.unknown, ++t.unknown; break;
        }
    };

    if (auto dir = fs::path(c.journal).parent_path(); !dir.empty()) {
        std::error_code ec;
        fs::create_directories(dir, ec);
    }
    std::ofstream journal(c.journal, std::ios::app);
    if (!journal) throw CampaignIoError("cannot open journal " + c.journal, durable);
    if (!c.witness_dir.empty()) fs::create_directories(c.witness_dir);

    for (const auto& path : c.inputs) {
        std::vector<GraphRecord> records;
        try {
            records = read_catalog(path);
        } catch (const GraphError& e) {
            throw CampaignIoError(e.what(), durable);
        }
        s.scanned += records.size();
        std::vector<const GraphRecord*> todo;
        for (const auto& rec : records) {
            auto it = done.find(rec.source);
            if (it != done.end()) {
                ++s.resumed;
                count(rec.graph.order(), it->second.outcome);
            } else {
                todo.push_back(&rec);
            }
        }
        const std::size_t chunk = std::max<std::size_t>(64, 16 * c.threads);
        for (std::size_t lo = 0; lo < todo.size(); lo += chunk) {
            std::size_t hi = std::min(todo.size(), lo + chunk);
            std::vector<std::optional<ResultRecord>> out(hi - lo);
            std::vector<std::string> witnesses(hi - lo);
            std::atomic<std::size_t> next{lo};
            std::exception_ptr failure;
            std::mutex failure_mu;
            auto worker = [&] {
                for (std::size_t i; (i = next++) < hi;) {
                    try {
                        const auto& rec = *todo[i];
                        bool keep = true;
                        for (const auto& f : c.filters) {
                            keep = passes_filter(rec.graph, f, c.node_budget);
                            if (!keep) break;
                        }
                        if (!keep) continue;
                        auto t0 = std::chrono::steady_clock::now();
                        auto ev = evaluate_assertion(rec.graph, c.assertion, c.node_budget);
                        auto t1 = std::chrono::steady_clock::now();
                        ResultRecord r;
                        r.key = rec.source;
                        r.outcome = ev.outcome;
                        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                        r.order = rec.graph.order();
                        if (r.outcome == RecordOutcome::fail) r.encoding = encode_record(rec.graph);
                        witnesses[i - lo] = std::move(ev.witness);
                        out[i - lo] = std::move(r);
                    } catch (...) {
                        std::lock_guard lock(failure_mu);
                        if (!failure) failure = std::current_exception();
                    }
                }
            };
            unsigned nthreads = std::max(1u, c.threads);
            if (nthreads == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
                for (auto& t : pool) t.join();
            }
            if (failure) std::rethrow_exception(failure);
            std::size_t written = 0;
            for (std::size_t k = 0; k < out.size(); ++k) {
                if (!out[k]) {
                    ++s.filtered;
                    continue;
                }
                auto& r = *out[k];
                if (!c.witness_dir.empty() && !witnesses[k].empty()) {
                    auto wpath = (fs::path(c.witness_dir) / (sanitize(r.key) + ".cert")).string();
                    std::ofstream w(wpath);
                    w << witnesses[k];
                    if (!w) throw CampaignIoError("cannot write witness " + wpath, durable);
                    r.witness = wpath;
                }
                journal << format_record(r) << '\n';
                ++written;
                ++s.evaluated;
                count(r.order, r.outcome);
            }
            journal.flush();
            if (!journal) throw CampaignIoError("journal write failed: " + c.journal, durable);
            durable += written;
        }
    }
    if (!c.report.empty()) {
        std::ofstream rep(c.report, std::ios::trunc);
        rep << summary_json(s) << '\n';
        if (!rep) throw CampaignIoError("cannot write report " + c.report, durable);
    }
    return s;
}

std::string format_summary(const CampaignSummary& s)
{
    std::ostringstream out;
    out << "campaign " << s.name << "\n";
    out << "scanned " << s.scanned << " filtered " << s.filtered << " resumed " << s.resumed << " evaluated "
        << s.evaluated << "\n";
    for (const auto& [n, oc] : s.by_order)
        out << "order " << n << " pass " << oc.pass << " fail " << oc.fail << " unknown " << oc.unknown << "\n";
    out << "total pass " << s.total.pass << " fail " << s.total.fail << " unknown " << s.total.unknown << "\n";
    return out.str();
}

std::string summary_json(const CampaignSummary& s)
{
    nlohmann::json j;
    j["name"] = s.name;
    j["scanned"] = s.scanned;
    j["filtered"] = s.filtered;
    j["resumed"] = s.resumed;
    j["evaluated"] = s.evaluated;
    auto counts = [](const OrderCounts& c) { return nlohmann::json{{"pass", c.pass}, {"fail", c.fail}, {"unknown", c.unknown}}; };
    nlohmann::json orders = nlohmann::json::object();
    for (const auto& [n, oc] : s.by_order) orders[std::to_string(n)] = counts(oc);
    j["by_order"] = orders;
    j["total"] = counts(s.total);
    return j.dump();
}

MinimalityResult MinimalityFilter::feed(std::size_t order, const std::vector<GraphRecord>& records)
{
    if (!last_order_ && order > 10) throw GraphError("missing catalog for order 10");
    if (last_order_ && order != *last_order_ + 2)
        throw GraphError("missing catalog for order " + std::to_string(*last_order_ + 2));
    last_order_ = order;
    SearchOptions opts;
    opts.node_budget = budget_;
    MinimalityResult res;
    for (const auto& rec : records) {
        if (rec.graph.order() != order) throw GraphError(rec.source + ": order differs from " + std::to_string(order));
        if (!is_interesting(rec.graph)) continue;
        ++res.interesting;
        bool contains = false, unsure = false;
        for (const auto& m : minimal_) {
            auto r = contains_subdivision(rec.graph, m.graph, opts);
            if (r.outcome == SearchOutcome::found) {
                contains = true;
                break;
            }
            if (r.outcome == SearchOutcome::unknown) unsure = true;
        }
        if (contains) continue;
        if (unsure) {
            ++res.unknown;
            continue;
        }
        res.minimal.push_back(rec);
    }
    minimal_.insert(minimal_.end(), res.minimal.begin(), res.minimal.end());
    return res;
}

MinimalityResult minimality_filter(const std::map<std::size_t, std::vector<GraphRecord>>& catalogs, std::size_t n,
                                   std::uint64_t node_budget)
{
    MinimalityFilter filter(node_budget);
    MinimalityResult last;
    for (std::size_t k = 10; k <= n; k += 2) {
        auto it = catalogs.find(k);
        if (it == catalogs.end()) throw GraphError("missing catalog for order " + std::to_string(k));
        last = filter.feed(k, it->second);
    }
    return last;
}

}  // namespace petcheck
