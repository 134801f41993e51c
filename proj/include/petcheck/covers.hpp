#pragma once

#include "petcheck/circuits.hpp"
#include "petcheck/containment.hpp"
#include "petcheck/graph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace petcheck {

/// Edge id -> non-negative integer weight.
using EdgeWeighting = std::map<EdgeId, long long>;

EdgeWeighting constant_weighting(const MultiGraph& g, long long value);

/// Every edge-cut has even weight at least twice the weight of each of its
/// edges. Checked as star parity plus, for each edge uv, a minimum u-v cut.
/// Throws GraphError when an edge of g has no weight.
bool is_admissible(const MultiGraph& g, const EdgeWeighting& p, std::string* reason = nullptr);

/// Circuits with multiplicities.
struct CircuitCover {
    std::vector<std::pair<Circuit, std::size_t>> circuits;
};

struct CoverOptions {
    long long max_value = 4;
    std::size_t max_edges = 30;
    std::uint64_t node_budget = 10'000'000;
};

struct CoverResult {
    SearchOutcome outcome = SearchOutcome::unknown;
    std::optional<CircuitCover> cover;
    std::uint64_t nodes = 0;
};

/// Exact search for circuits covering each edge e exactly p(e) times.
/// Requires p admissible (throws GraphError otherwise); unknown when a bound
/// of `options` is exceeded.
CoverResult circuit_cover_exists(const MultiGraph& g, const EdgeWeighting& p, const CoverOptions& options = {});

bool validate_circuit_cover(const MultiGraph& g, const EdgeWeighting& p, const CircuitCover& c,
                            std::string* reason = nullptr);

/// The first admissible weighting with values in 0..max_value, ordered by
/// total weight then lexicographically by edge id, that has no circuit cover.
std::optional<EdgeWeighting> find_uncoverable_weighting(const MultiGraph& g, long long max_value = 2,
                                                        const CoverOptions& options = {});

/// Five even edge sets; every edge lies in exactly two.
struct EulerianFiveCover {
    std::array<std::vector<EdgeId>, 5> subgraphs;
};

inline constexpr std::size_t kFiveCoverMaxCycleRank = 22;

struct FiveCoverResult {
    SearchOutcome outcome = SearchOutcome::unknown;
    std::optional<EulerianFiveCover> cover;
    std::uint64_t nodes = 0;
};

/// Requires g cubic, 2-edge-connected and Petersen-free (throws GraphError
/// otherwise). Each edge receives the pair of subgraphs containing it; the
/// search is exact and reports unknown above kFiveCoverMaxCycleRank or the budget.
FiveCoverResult five_eulerian_cover(const MultiGraph& g, std::uint64_t node_budget = 10'000'000);

/// Same search without the hypothesis gate.
FiveCoverResult five_eulerian_cover_unchecked(const MultiGraph& g, std::uint64_t node_budget = 10'000'000);

bool validate_five_cover(const MultiGraph& g, const EulerianFiveCover& c, std::string* reason = nullptr);

/// |E| - |V| + components: log2 of the number of even subgraphs.
std::size_t cycle_rank(const MultiGraph& g);

}  // namespace petcheck
