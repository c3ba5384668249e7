#ifndef BBNET_GRAPH_HPP
#define BBNET_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bbnet {

using NodeIndex = std::int32_t;
using Timestamp = std::int64_t;

struct NodeRecord {
    std::string id;
    Timestamp birth_time = 0;
    double fitness = -1.0;  // < 0 means unknown (ingested data)
    std::int64_t birth_degree = 0;

    bool has_fitness() const { return fitness >= 0.0; }
};

struct TimedEdge {
    NodeIndex a;
    NodeIndex b;
    Timestamp time;
};

/// Frozen view of the graph at a point in time. Nodes are insertion-ordered
/// and birth times are non-decreasing, so the nodes alive at `time` are
/// exactly indices [0, degree.size()).
struct Snapshot {
    Timestamp time = 0;
    std::vector<std::int64_t> degree;
    std::int64_t edge_count = 0;

    std::size_t node_count() const { return degree.size(); }
    std::int64_t total_degree() const { return 2 * edge_count; }
};

struct TrajectoryPoint {
    Timestamp time = 0;
    std::int64_t degree = 0;
    std::optional<double> fraction;  // absent while the graph has no edges
};

/// Timestamped simple undirected graph that only grows. Nodes and edges are
/// inserted with non-decreasing timestamps (a single shared clock), which is
/// what makes snapshots prefix views.
class EvolvingGraph {
public:
    NodeIndex add_node(std::string id, Timestamp birth_time, double fitness = -1.0);
    void add_edge(NodeIndex a, NodeIndex b, Timestamp time);
    void add_edge(const std::string& a, const std::string& b, Timestamp time);

    bool has_node(const std::string& id) const { return index_.count(id) != 0; }
    bool has_edge(NodeIndex a, NodeIndex b) const;
    NodeIndex index_of(const std::string& id) const;  // throws on unknown id

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::int64_t degree(NodeIndex i) const { return degree_.at(static_cast<std::size_t>(i)); }
    const NodeRecord& node(NodeIndex i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    void set_birth_degree(NodeIndex i, std::int64_t m) { nodes_.at(static_cast<std::size_t>(i)).birth_degree = m; }
    const std::vector<NodeRecord>& nodes() const { return nodes_; }
    const std::vector<TimedEdge>& edges() const { return edges_; }

    /// Largest timestamp inserted so far (node or edge); 0 on an empty graph.
    Timestamp last_time() const { return clock_; }

    std::int64_t degree_at(NodeIndex i, Timestamp t) const;
    std::int64_t edge_count_at(Timestamp t) const;
    std::size_t node_count_at(Timestamp t) const;

    Snapshot snapshot_at(Timestamp t) const;
    std::vector<TrajectoryPoint> degree_trajectory(NodeIndex i, std::span<const Timestamp> times) const;
    std::vector<TrajectoryPoint> degree_trajectory(const std::string& id, std::span<const Timestamp> times) const;

private:
    std::vector<NodeRecord> nodes_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<TimedEdge> edges_;  // non-decreasing in time
    std::vector<std::int64_t> degree_;
    std::vector<std::vector<Timestamp>> incident_times_;  // per node, sorted
    std::vector<std::unordered_set<NodeIndex>> adjacency_;
    Timestamp clock_ = 0;
    bool clock_started_ = false;
};

/// Ordered sequence of frozen snapshots of one graph.
struct SnapshotSeries {
    std::vector<Timestamp> times;
    std::vector<Snapshot> snapshots;

    static SnapshotSeries from(const EvolvingGraph& graph, std::span<const Timestamp> times);
    std::size_t size() const { return snapshots.size(); }
    bool empty() const { return snapshots.empty(); }
};

}  // namespace bbnet

#endif
