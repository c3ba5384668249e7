#include "bbnet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbnet {

NodeIndex EvolvingGraph::add_node(std::string id, Timestamp birth_time, double fitness) {
    if (index_.count(id) != 0) {
        throw std::invalid_argument("duplicate node id: " + id);
    }
    if (clock_started_ && birth_time < clock_) {
        throw std::invalid_argument("time regression: node '" + id + "' born at " +
                                    std::to_string(birth_time) + " after clock " +
                                    std::to_string(clock_));
    }
    if (fitness >= 0.0 && fitness > 1.0) {
        throw std::invalid_argument("fitness out of [0,1]: " + std::to_string(fitness));
    }
    auto idx = static_cast<NodeIndex>(nodes_.size());
    index_.emplace(id, idx);
    nodes_.push_back(NodeRecord{std::move(id), birth_time, fitness, 0});
    degree_.push_back(0);
    incident_times_.emplace_back();
    adjacency_.emplace_back();
    clock_ = birth_time;
    clock_started_ = true;
    return idx;
}

void EvolvingGraph::add_edge(NodeIndex a, NodeIndex b, Timestamp time) {
    if (a == b) {
        throw std::invalid_argument("self-loop on node index " + std::to_string(a));
    }
    auto n = static_cast<NodeIndex>(nodes_.size());
    if (a < 0 || a >= n || b < 0 || b >= n) {
        throw std::invalid_argument("unknown node index");
    }
    if (time < clock_) {
        throw std::invalid_argument("time regression: edge at " + std::to_string(time) +
                                    " after clock " + std::to_string(clock_));
    }
    if (has_edge(a, b)) {
        throw std::invalid_argument("duplicate edge (" + nodes_[static_cast<std::size_t>(a)].id +
                                    ", " + nodes_[static_cast<std::size_t>(b)].id + ")");
    }
    edges_.push_back(TimedEdge{a, b, time});
    degree_[static_cast<std::size_t>(a)] += 1;
    degree_[static_cast<std::size_t>(b)] += 1;
    incident_times_[static_cast<std::size_t>(a)].push_back(time);
    incident_times_[static_cast<std::size_t>(b)].push_back(time);
    adjacency_[static_cast<std::size_t>(a)].insert(b);
    adjacency_[static_cast<std::size_t>(b)].insert(a);
    clock_ = time;
}

void EvolvingGraph::add_edge(const std::string& a, const std::string& b, Timestamp time) {
    add_edge(index_of(a), index_of(b), time);
}

bool EvolvingGraph::has_edge(NodeIndex a, NodeIndex b) const {
    const auto& sa = adjacency_.at(static_cast<std::size_t>(a));
    const auto& sb = adjacency_.at(static_cast<std::size_t>(b));
    const auto& smaller = sa.size() <= sb.size() ? sa : sb;
    return smaller.count(sa.size() <= sb.size() ? b : a) != 0;
}

NodeIndex EvolvingGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw std::invalid_argument("unknown node: " + id);
    }
    return it->second;
}

std::int64_t EvolvingGraph::degree_at(NodeIndex i, Timestamp t) const {
    const auto& times = incident_times_.at(static_cast<std::size_t>(i));
    auto it = std::upper_bound(times.begin(), times.end(), t);
    return static_cast<std::int64_t>(it - times.begin());
}

std::int64_t EvolvingGraph::edge_count_at(Timestamp t) const {
    auto it = std::upper_bound(edges_.begin(), edges_.end(), t,
                               [](Timestamp v, const TimedEdge& e) { return v < e.time; });
    return static_cast<std::int64_t>(it - edges_.begin());
}

std::size_t EvolvingGraph::node_count_at(Timestamp t) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                               [](Timestamp v, const NodeRecord& r) { return v < r.birth_time; });
    return static_cast<std::size_t>(it - nodes_.begin());
}

Snapshot EvolvingGraph::snapshot_at(Timestamp t) const {
    Snapshot snap;
    snap.time = t;
    std::size_t alive = node_count_at(t);
    snap.degree.resize(alive);
    for (std::size_t i = 0; i < alive; ++i) {
        snap.degree[i] = degree_at(static_cast<NodeIndex>(i), t);
    }
    snap.edge_count = edge_count_at(t);
    return snap;
}

std::vector<TrajectoryPoint> EvolvingGraph::degree_trajectory(NodeIndex i,
                                                              std::span<const Timestamp> times) const {
    if (i < 0 || static_cast<std::size_t>(i) >= nodes_.size()) {
        throw std::invalid_argument("unknown node index " + std::to_string(i));
    }
    std::vector<TrajectoryPoint> out;
    out.reserve(times.size());
    for (Timestamp t : times) {
        TrajectoryPoint p;
        p.time = t;
        p.degree = degree_at(i, t);
        std::int64_t total = 2 * edge_count_at(t);
        if (total > 0) {
            p.fraction = static_cast<double>(p.degree) / static_cast<double>(total);
        }
        out.push_back(p);
    }
    return out;
}

std::vector<TrajectoryPoint> EvolvingGraph::degree_trajectory(const std::string& id,
                                                              std::span<const Timestamp> times) const {
    return degree_trajectory(index_of(id), times);
}

SnapshotSeries SnapshotSeries::from(const EvolvingGraph& graph, std::span<const Timestamp> times) {
    SnapshotSeries series;
    series.times.assign(times.begin(), times.end());
    if (!std::is_sorted(series.times.begin(), series.times.end())) {
        throw std::invalid_argument("snapshot times must be non-decreasing");
    }
    series.snapshots.reserve(series.times.size());
    for (Timestamp t : series.times) {
        series.snapshots.push_back(graph.snapshot_at(t));
    }
    return series;
}

}  // namespace bbnet
