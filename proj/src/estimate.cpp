#include "bbnet/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bbnet/linear_fit.hpp"

namespace bbnet {

namespace {

void normalize_to_max(FitnessEstimate& est) {
    double peak = 0.0;
    for (double v : est.eta) peak = std::max(peak, v);
    if (!(peak > 0.0)) {
        throw std::runtime_error("fitness normalization undefined: all values zero");
    }
    for (double& v : est.eta) v /= peak;
}

}  // namespace

FitnessEstimate measure_fitness(const EvolvingGraph& graph, Timestamp t1, Timestamp t2,
                                std::int64_t k_min) {
    if (t1 >= t2) throw std::invalid_argument("measure_fitness needs t1 < t2");
    FitnessEstimate est;
    est.t1 = t1;
    est.t2 = t2;
    est.k_min = k_min;
    std::size_t alive = graph.node_count_at(t1);
    for (std::size_t i = 0; i < alive; ++i) {
        auto idx = static_cast<NodeIndex>(i);
        std::int64_t k1 = graph.degree_at(idx, t1);
        if (k1 < k_min || k1 == 0) continue;
        std::int64_t dk = graph.degree_at(idx, t2) - k1;
        est.node.push_back(idx);
        est.eta.push_back(static_cast<double>(dk) / static_cast<double>(k1));
    }
    if (est.node.empty()) {
        throw std::runtime_error("measure_fitness: no node with k(t1) >= k_min");
    }
    normalize_to_max(est);
    return est;
}

FitnessEstimate known_fitness_estimate(const EvolvingGraph& graph, Timestamp t1, Timestamp t2,
                                       std::int64_t k_min) {
    FitnessEstimate est;
    est.t1 = t1;
    est.t2 = t2;
    est.k_min = k_min;
    std::size_t alive = graph.node_count_at(t1);
    for (std::size_t i = 0; i < alive; ++i) {
        auto idx = static_cast<NodeIndex>(i);
        if (!graph.node(idx).has_fitness()) continue;
        if (graph.degree_at(idx, t1) < k_min) continue;
        est.node.push_back(idx);
        est.eta.push_back(graph.node(idx).fitness);
    }
    if (est.node.empty()) {
        throw std::runtime_error("known_fitness_estimate: no qualifying node with stored fitness");
    }
    normalize_to_max(est);
    return est;
}

namespace {

GrowthFit fit_growth_points(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw std::runtime_error("fit_growth needs at least 2 snapshots with edges");
    }
    std::vector<double> lx, ly;
    lx.reserve(points.size());
    ly.reserve(points.size());
    for (auto& [n, d] : points) {
        lx.push_back(std::log(n));
        ly.push_back(std::log(d));
    }
    LineFit line = fit_line(lx, ly);
    GrowthFit fit;
    fit.beta_hat = line.slope;
    fit.c_hat = std::exp(line.intercept);
    fit.residual = line.rms_residual;
    fit.points = std::move(points);
    return fit;
}

}  // namespace

GrowthFit fit_growth(const SnapshotSeries& series) {
    std::vector<std::pair<double, double>> points;
    for (const Snapshot& snap : series.snapshots) {
        if (snap.edge_count == 0 || snap.node_count() == 0) continue;
        double n = static_cast<double>(snap.node_count());
        points.emplace_back(n, 2.0 * static_cast<double>(snap.edge_count) / n);
    }
    return fit_growth_points(std::move(points));
}

GrowthFit fit_growth(const EvolvingGraph& graph, std::span<const Timestamp> times) {
    std::vector<std::pair<double, double>> points;
    for (Timestamp t : times) {
        auto n = static_cast<double>(graph.node_count_at(t));
        auto e = static_cast<double>(graph.edge_count_at(t));
        if (n == 0 || e == 0) continue;
        points.emplace_back(n, 2.0 * e / n);
    }
    return fit_growth_points(std::move(points));
}

AlphaFit estimate_alpha(const EvolvingGraph& graph, Timestamp t1, Timestamp t2,
                        const FitnessEstimate& fitness, int bins) {
    if (t1 >= t2) throw std::invalid_argument("estimate_alpha needs t1 < t2");
    if (bins < 8) throw std::invalid_argument("estimate_alpha needs >= 8 log bins");

    std::size_t alive = graph.node_count_at(t1);

    // endpoint counts over (t1, t2] landing on pre-t1 nodes
    std::vector<std::int64_t> hits(alive, 0);
    std::int64_t events = 0;
    for (const TimedEdge& e : graph.edges()) {
        if (e.time <= t1 || e.time > t2) continue;
        for (NodeIndex end : {e.a, e.b}) {
            if (static_cast<std::size_t>(end) < alive) {
                hits[static_cast<std::size_t>(end)] += 1;
                ++events;
            }
        }
    }
    if (events < 100) {
        throw std::runtime_error("estimate_alpha: fewer than 100 attachment events in window");
    }

    // x = eta_hat * k(t1) per node carrying a fitness value
    std::vector<double> xs;
    std::vector<std::int64_t> node_hits;
    for (std::size_t j = 0; j < fitness.node.size(); ++j) {
        auto idx = fitness.node[j];
        if (static_cast<std::size_t>(idx) >= alive) continue;
        double x = fitness.eta[j] * static_cast<double>(graph.degree_at(idx, t1));
        if (!(x > 0.0)) continue;
        xs.push_back(x);
        node_hits.push_back(hits[static_cast<std::size_t>(idx)]);
    }
    if (xs.size() < 2) throw std::runtime_error("estimate_alpha: too few usable nodes");

    auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    double lo = std::log(*lo_it);
    double hi = std::log(*hi_it);
    if (!(hi > lo)) throw std::runtime_error("estimate_alpha: degenerate single bin");
    double width = (hi - lo) / static_cast<double>(bins);

    std::vector<std::int64_t> bin_nodes(static_cast<std::size_t>(bins), 0);
    std::vector<std::int64_t> bin_hits(static_cast<std::size_t>(bins), 0);
    std::vector<double> bin_logx(static_cast<std::size_t>(bins), 0.0);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        auto b = static_cast<std::size_t>((std::log(xs[j]) - lo) / width);
        b = std::min(b, static_cast<std::size_t>(bins - 1));
        bin_nodes[b] += 1;
        bin_hits[b] += node_hits[j];
        bin_logx[b] += std::log(xs[j]);
    }

    std::vector<double> px, py;
    for (std::size_t b = 0; b < static_cast<std::size_t>(bins); ++b) {
        if (bin_nodes[b] == 0 || bin_hits[b] == 0) continue;
        double rate = static_cast<double>(bin_hits[b]) / static_cast<double>(bin_nodes[b]);
        px.push_back(bin_logx[b] / static_cast<double>(bin_nodes[b]));
        py.push_back(std::log(rate));
    }
    if (px.size() < 2) throw std::runtime_error("estimate_alpha: degenerate single bin");

    LineFit line = fit_line(px, py);
    AlphaFit fit;
    fit.raw_slope = line.slope;
    fit.alpha_hat = std::clamp(line.slope, 0.0, 1.5);
    fit.events = events;
    fit.bins_used = static_cast<int>(px.size());
    return fit;
}

}  // namespace bbnet
