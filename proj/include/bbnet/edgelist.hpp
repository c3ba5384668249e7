#ifndef BBNET_EDGELIST_HPP
#define BBNET_EDGELIST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bbnet/graph.hpp"

namespace bbnet {

struct TimedEdgeRecord {
    std::string src;
    std::string dst;
    Timestamp time = 0;
};

/// Column layout for ingesting delimited edge lists (BioGRID-style exports).
struct ColumnMap {
    int col_a = 0;
    int col_b = 1;
    int col_t = 2;
    char delimiter = '\t';
    int skip_header = 0;
};

struct ParseResult {
    std::vector<TimedEdgeRecord> edges;  // file order, deduplicated
    std::int64_t self_loops_dropped = 0;
    std::int64_t duplicates_dropped = 0;
};

/// Parse a timestamped edge list. `#` lines and blank lines are skipped;
/// duplicate unordered pairs keep the earliest time; self-loops are dropped
/// and counted. Malformed lines throw with the line number and content.
ParseResult parse_edges(std::istream& in, const ColumnMap& colmap = {});

struct BuiltGraph {
    EvolvingGraph graph;
    std::vector<Timestamp> snapshot_times;  // every distinct edge time, sorted
};

/// Node birth time = earliest incident edge time.
BuiltGraph build_graph(const std::vector<TimedEdgeRecord>& edges);

/// Tab-delimited `src dst time` lines sorted by (time, src, dst), preceded by
/// the given `#` comment lines. Byte-deterministic for a fixed graph.
void serialize_graph(const EvolvingGraph& graph, std::ostream& out,
                     const std::vector<std::string>& header_comments = {});

/// Sidecar per-node metadata: id, birth_time, fitness, birth_degree
/// (tab-delimited, `-` for unknown fitness), sorted by (birth_time, id).
void serialize_node_metadata(const EvolvingGraph& graph, std::ostream& out,
                             const std::vector<std::string>& header_comments = {});

struct NodeMetadataRecord {
    std::string id;
    Timestamp birth_time = 0;
    double fitness = -1.0;  // < 0 means unknown
    std::int64_t birth_degree = 0;
};

std::vector<NodeMetadataRecord> parse_node_metadata(std::istream& in);

}  // namespace bbnet

#endif
