#pragma once

#include "petcheck/graph.hpp"

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace petcheck {

/// Parse failure; `offset` is the byte position within the record.
class ParseError : public GraphError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : GraphError(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 or sparse6 record (sparse6 starts with ':'). An optional
/// `>>graph6<<` / `>>sparse6<<` header and trailing newline are accepted.
MultiGraph parse_graph6(std::string_view line);

/// graph6 encoding; the graph must be simple (no loops, no parallel edges).
std::string encode_graph6(const MultiGraph& g);
/// sparse6 encoding; supports loops and parallel edges.
std::string encode_sparse6(const MultiGraph& g);
/// graph6 when the graph is simple, sparse6 otherwise.
std::string encode_record(const MultiGraph& g);

/// Adjacency-list text: header `n m`, then m lines `u v` (0-indexed).
/// Blank lines and lines starting with '#' are ignored.
MultiGraph parse_adjacency(std::istream& in);
std::string encode_adjacency(const MultiGraph& g);

/// Reads every record of a graph6/sparse6 catalog; `source` is `path:line`.
std::vector<GraphRecord> read_catalog(const std::string& path);

/// Loads a graph file, detecting adjacency-list vs graph6/sparse6 content.
/// Only the first record of a catalog is returned.
MultiGraph load_graph_file(const std::string& path);

/// Edge weights as lines `edge_id weight`.
std::map<EdgeId, long long> parse_weights(std::istream& in);

}  // namespace petcheck
