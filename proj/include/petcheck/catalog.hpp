#pragma once

#include "petcheck/containment.hpp"
#include "petcheck/graph.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace petcheck {

/// Journal write or catalog read failure during a campaign.
class CampaignIoError : public GraphError {
public:
    CampaignIoError(const std::string& what, std::size_t durable_records)
        : GraphError(what + " (journal holds " + std::to_string(durable_records) + " durable records)"),
          durable_(durable_records)
    {
    }
    std::size_t durable_records() const { return durable_; }

private:
    std::size_t durable_;
};

struct FilterSpec {
    std::string name;  // cubic, connected, two_edge_connected, min_girth, interesting, ...
    long long arg = 0;
};

struct AssertionSpec {
    std::string name;      // contains_petersen, is_interesting, five_eulerian_cover, ...
    std::string expected;  // found / none / true / false
};

/// Campaign definition, one `key = value` per line:
///   name, filter (repeatable), assertion, input (repeatable), journal,
///   report, witness_dir, threads, budget.
struct Campaign {
    std::string name;
    std::vector<FilterSpec> filters;
    AssertionSpec assertion;
    std::vector<std::string> inputs;
    std::string journal;
    std::string report;
    std::string witness_dir;
    unsigned threads = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

const std::vector<std::string>& filter_names();
const std::vector<std::string>& assertion_names();

/// Relative paths are resolved against base_dir. Throws GraphError on
/// unknown keys, filters or assertions.
Campaign parse_campaign(std::istream& in, const std::string& base_dir = ".");
Campaign load_campaign(const std::string& path);

bool passes_filter(const MultiGraph& g, const FilterSpec& f, std::uint64_t node_budget = kDefaultNodeBudget);

enum class RecordOutcome { pass, fail, unknown };

const char* record_outcome_name(RecordOutcome o);
RecordOutcome parse_record_outcome(const std::string& s);

struct Evaluation {
    RecordOutcome outcome = RecordOutcome::unknown;
    std::string witness;  // certificate text, when the assertion produces one
};

Evaluation evaluate_assertion(const MultiGraph& g, const AssertionSpec& a, std::uint64_t node_budget = kDefaultNodeBudget);

/// One journal line: `key outcome witness millis [encoding]`, key = `file:line`.
/// witness is `-` when absent; encoding is present exactly on fail records.
struct ResultRecord {
    std::string key;
    RecordOutcome outcome = RecordOutcome::unknown;
    std::string witness = "-";
    long long millis = 0;
    std::string encoding;
    std::size_t order = 0;  // not stored; filled from the encoding or the catalog
};

std::string format_record(const ResultRecord& r);
ResultRecord parse_record(const std::string& line);
std::vector<ResultRecord> read_journal(const std::string& path);

struct OrderCounts {
    std::size_t pass = 0, fail = 0, unknown = 0;
    friend bool operator==(const OrderCounts&, const OrderCounts&) = default;
};

struct CampaignSummary {
    std::string name;
    std::size_t scanned = 0;   // catalog records read
    std::size_t filtered = 0;  // records rejected by a filter
    std::size_t resumed = 0;   // records already in the journal
    std::size_t evaluated = 0;
    std::map<std::size_t, OrderCounts> by_order;
    OrderCounts total;
};

/// Evaluates every catalog graph passing the filters and appends one journal
/// line per graph. Records already journaled (by key) are skipped and counted
/// from the journal. Results are appended in catalog order regardless of threads.
CampaignSummary run_campaign(const Campaign& c);

std::string format_summary(const CampaignSummary& s);
std::string summary_json(const CampaignSummary& s);

/// Interesting graphs of order n containing no interesting graph of smaller
/// order. `catalogs` maps each order to its records and must hold every even
/// order from 10 up to n (throws GraphError naming a missing order).
struct MinimalityResult {
    std::vector<GraphRecord> minimal;
    std::size_t interesting = 0;
    std::size_t unknown = 0;  // containment searches that hit the budget
};

class MinimalityFilter {
public:
    explicit MinimalityFilter(std::uint64_t node_budget = kDefaultNodeBudget) : budget_(node_budget) {}
    /// Orders must be fed in increasing order.
    MinimalityResult feed(std::size_t order, const std::vector<GraphRecord>& records);
    const std::vector<GraphRecord>& known_minimal() const { return minimal_; }

private:
    std::uint64_t budget_;
    std::optional<std::size_t> last_order_;
    std::vector<GraphRecord> minimal_;
};

MinimalityResult minimality_filter(const std::map<std::size_t, std::vector<GraphRecord>>& catalogs, std::size_t n,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace petcheck
