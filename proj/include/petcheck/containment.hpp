#pragma once

#include "petcheck/graph.hpp"
#include "petcheck/isomorphism.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace petcheck {

/// A host path standing for one pattern edge.
struct HostPath {
    std::vector<VertexId> vertices;  // vertices.size() == edges.size() + 1
    std::vector<EdgeId> edges;
};

/// A subgraph of the host isomorphic to a subdivision of the pattern.
/// Both maps are indexed by pattern ids; unused slots hold kNoVertex / empty paths.
struct SubdivisionWitness {
    std::vector<VertexId> branch_map;
    std::vector<HostPath> path_map;
};

enum class SearchOutcome {
    found,
    none,
    unknown,  // node budget exhausted
};

const char* outcome_name(SearchOutcome o);

struct ContainmentResult {
    SearchOutcome outcome = SearchOutcome::unknown;
    std::optional<SubdivisionWitness> witness;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Pattern automorphisms used to prune the first branch vertex.
    bool use_symmetry = true;
};

/// Complete backtracking search for a subdivision of `pattern` in `host`.
/// Branch vertices are tried in order of host degree; paths are grown one
/// edge at a time with capacity and reachability pruning.
ContainmentResult contains_subdivision(const MultiGraph& host, const MultiGraph& pattern,
                                       const SearchOptions& options = {});

ContainmentResult contains_petersen(const MultiGraph& host, const SearchOptions& options = {});

/// Independent replay of a witness. On failure `reason` (if given) names the defect.
bool validate_witness(const MultiGraph& host, const MultiGraph& pattern, const SubdivisionWitness& w,
                      std::string* reason = nullptr);

/// `branch i -> v` lines, then `path (i,j): v0 v1 ... vk` lines in pattern edge order.
std::string witness_certificate(const MultiGraph& pattern, const SubdivisionWitness& w);

/// Reads a certificate. Host edges are recovered from consecutive vertex
/// pairs, taking the lowest unused parallel edge. Throws GraphError on
/// malformed text or non-adjacent consecutive vertices.
SubdivisionWitness parse_certificate(const MultiGraph& host, const MultiGraph& pattern, std::istream& in);

/// The witness mapped through a host relabelling (old id -> new id).
SubdivisionWitness relabel_witness(const SubdivisionWitness& w, const std::vector<VertexId>& vertex_map,
                                   const std::vector<EdgeId>& edge_map);

}  // namespace petcheck
