#ifndef BBNET_ESTIMATE_HPP
#define BBNET_ESTIMATE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bbnet/graph.hpp"

namespace bbnet {

/// Per-node relative fitness measured between two snapshots; normalized so
/// the largest value is exactly 1. Only nodes with k(t1) >= k_min appear.
struct FitnessEstimate {
    std::vector<NodeIndex> node;
    std::vector<double> eta;  // parallel to node
    Timestamp t1 = 0;
    Timestamp t2 = 0;
    std::int64_t k_min = 0;
};

/// eta_i = (dk_i / k_i(t1)) / max_j (dk_j / k_j(t1)) over nodes with
/// k(t1) >= k_min. Throws when no node qualifies or every dk is zero.
FitnessEstimate measure_fitness(const EvolvingGraph& graph, Timestamp t1, Timestamp t2,
                                std::int64_t k_min = 5);

/// FitnessEstimate built from stored node fitness (generated graphs), with
/// the same normalization and k_min filter as measure_fitness.
FitnessEstimate known_fitness_estimate(const EvolvingGraph& graph, Timestamp t1, Timestamp t2,
                                       std::int64_t k_min = 5);

struct GrowthFit {
    double c_hat = 0.0;
    double beta_hat = 0.0;
    double residual = 0.0;  // RMS in log space
    std::vector<std::pair<double, double>> points;  // (n, d) per usable snapshot
};

/// Least squares through (ln n, ln d), d = 2E/n; snapshots without edges
/// are skipped.
GrowthFit fit_growth(const SnapshotSeries& series);
GrowthFit fit_growth(const EvolvingGraph& graph, std::span<const Timestamp> times);

struct AlphaFit {
    double alpha_hat = 0.0;  // clamped to [0, 1.5]
    double raw_slope = 0.0;
    std::int64_t events = 0;
    int bins_used = 0;
};

/// Attachment-suppression exponent from the kernel regression: bin the
/// pre-t1 nodes by x = eta_hat * k(t1) (log bins), per-bin attachment rate =
/// new edge endpoints per node over (t1, t2], slope of log rate vs log x.
AlphaFit estimate_alpha(const EvolvingGraph& graph, Timestamp t1, Timestamp t2,
                        const FitnessEstimate& fitness, int bins = 12);

}  // namespace bbnet

#endif
