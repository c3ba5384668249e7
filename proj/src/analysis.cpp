#include "bbnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bbnet/linear_fit.hpp"

namespace bbnet {

DegreeHistogram degree_histogram(const Snapshot& snapshot, double base) {
    if (!(base > 1.0)) throw std::invalid_argument("histogram base must be > 1");
    std::int64_t k_max = 0;
    std::int64_t counted = 0;
    for (std::int64_t k : snapshot.degree) {
        if (k >= 1) {
            ++counted;
            k_max = std::max(k_max, k);
        }
    }
    if (counted == 0) throw std::runtime_error("degree_histogram: no node with degree >= 1");

    DegreeHistogram hist;
    hist.base = base;
    hist.counted = counted;
    for (double lo = 1.0; lo <= static_cast<double>(k_max); lo *= base) {
        HistogramBin bin;
        bin.lower = lo;
        bin.upper = lo * base;
        hist.bins.push_back(bin);
    }
    for (std::int64_t k : snapshot.degree) {
        if (k < 1) continue;
        auto j = static_cast<std::size_t>(std::log(static_cast<double>(k)) / std::log(base));
        j = std::min(j, hist.bins.size() - 1);
        // float log can land one bin off at exact powers
        while (j > 0 && static_cast<double>(k) < hist.bins[j].lower) --j;
        while (j + 1 < hist.bins.size() && static_cast<double>(k) >= hist.bins[j].upper) ++j;
        hist.bins[j].count += 1;
    }
    for (HistogramBin& bin : hist.bins) {
        bin.density = static_cast<double>(bin.count) /
                      ((bin.upper - bin.lower) * static_cast<double>(counted));
    }
    return hist;
}

SlopeFit slope_and_curvature(const DegreeHistogram& hist) {
    std::vector<double> lx, ly;
    for (const HistogramBin& bin : hist.bins) {
        if (bin.count == 0) continue;
        lx.push_back(std::log(std::sqrt(bin.lower * bin.upper)));
        ly.push_back(std::log(bin.density));
    }
    if (lx.size() < 4) throw std::runtime_error("slope_and_curvature needs >= 4 non-empty bins");

    LineFit global = fit_line(lx, ly);
    double mid = (lx.front() + lx.back()) / 2.0;
    std::vector<double> lox, loy, hix, hiy;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        if (lx[i] <= mid) {
            lox.push_back(lx[i]);
            loy.push_back(ly[i]);
        } else {
            hix.push_back(lx[i]);
            hiy.push_back(ly[i]);
        }
    }
    if (lox.size() < 2 || hix.size() < 2) {
        throw std::runtime_error("slope_and_curvature: too few bins in one half");
    }
    SlopeFit fit;
    fit.slope = global.slope;
    fit.residual = global.rms_residual;
    fit.curvature = fit_line(hix, hiy).slope - fit_line(lox, loy).slope;
    return fit;
}

double ccdf_log_slope(const Snapshot& snapshot, double base) {
    std::vector<std::int64_t> degs;
    for (std::int64_t k : snapshot.degree)
        if (k >= 1) degs.push_back(k);
    if (degs.size() < 2) throw std::runtime_error("ccdf_log_slope: too few nodes");
    std::sort(degs.begin(), degs.end());
    auto total = static_cast<double>(degs.size());
    std::vector<double> lx, ly;
    for (double k = 1.0; k <= static_cast<double>(degs.back()); k *= base) {
        auto it = std::lower_bound(degs.begin(), degs.end(), static_cast<std::int64_t>(std::ceil(k)));
        auto tail = static_cast<double>(degs.end() - it);
        if (tail == 0.0) break;
        lx.push_back(std::log(k));
        ly.push_back(std::log(tail / total));
    }
    if (lx.size() < 3) throw std::runtime_error("ccdf_log_slope: too few evaluation points");
    return fit_line(lx, ly).slope;
}

std::vector<HubTrajectory> top_hub_trajectories(const EvolvingGraph& graph,
                                                std::span<const Timestamp> times, int top_n) {
    if (times.empty()) throw std::invalid_argument("top_hub_trajectories: empty time list");
    if (top_n < 1 || static_cast<std::size_t>(top_n) > graph.node_count()) {
        throw std::invalid_argument("top_n out of range");
    }
    Timestamp last = times.back();
    std::vector<NodeIndex> order(graph.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::nth_element(order.begin(), order.begin() + top_n - 1, order.end(),
                     [&](NodeIndex a, NodeIndex b) {
                         auto da = graph.degree_at(a, last);
                         auto db = graph.degree_at(b, last);
                         return da != db ? da > db : a < b;
                     });
    order.resize(static_cast<std::size_t>(top_n));
    std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
        auto da = graph.degree_at(a, last);
        auto db = graph.degree_at(b, last);
        return da != db ? da > db : a < b;
    });

    std::vector<HubTrajectory> out;
    for (NodeIndex i : order) {
        HubTrajectory hub;
        hub.node = i;
        hub.final_degree = graph.degree_at(i, last);
        hub.points = graph.degree_trajectory(i, times);
        out.push_back(std::move(hub));
    }
    return out;
}

PlateauStats plateau_stats(const std::vector<TrajectoryPoint>& trajectory, double window,
                           double tau) {
    PlateauStats stats;
    if (trajectory.empty()) return stats;
    auto tail = static_cast<std::size_t>(
        std::ceil(window * static_cast<double>(trajectory.size())));
    tail = std::clamp<std::size_t>(tail, 1, trajectory.size());
    double lo = 1e300, hi = 0.0, sum = 0.0;
    for (std::size_t i = trajectory.size() - tail; i < trajectory.size(); ++i) {
        double phi = trajectory[i].fraction.value_or(0.0);
        lo = std::min(lo, phi);
        hi = std::max(hi, phi);
        sum += phi;
    }
    stats.mean_phi = sum / static_cast<double>(tail);
    if (stats.mean_phi > 0.0) {
        stats.rel_spread = (hi - lo) / stats.mean_phi;
        stats.passed = stats.rel_spread <= tau;
    }
    return stats;
}

std::vector<BurstEvent> detect_bursts(const std::vector<TrajectoryPoint>& trajectory,
                                      const BurstParams& params) {
    std::vector<BurstEvent> out;
    if (trajectory.size() < 3) return out;
    std::int64_t final_degree = trajectory.back().degree;
    if (final_degree <= 0) return out;
    PlateauStats plateau = plateau_stats(trajectory, params.plateau_window, params.tau);
    for (std::size_t i = 1; i < trajectory.size(); ++i) {
        std::int64_t jump = trajectory[i].degree - trajectory[i - 1].degree;
        if (jump <= 0) continue;
        if (static_cast<double>(jump) < params.theta * static_cast<double>(final_degree)) continue;
        if (static_cast<double>(trajectory[i - 1].degree) >
            params.eps * static_cast<double>(final_degree))
            continue;
        BurstEvent ev;
        ev.index = i;
        ev.time = trajectory[i].time;
        ev.jump = jump;
        ev.pre_degree = trajectory[i - 1].degree;
        ev.plateau_phi = plateau.mean_phi;
        ev.plateau_passed = plateau.passed;
        out.push_back(ev);
    }
    return out;
}

std::string to_string(PhaseLabel label) {
    switch (label) {
        case PhaseLabel::ScaleFree: return "scale-free";
        case PhaseLabel::FitGetRich: return "fit-get-rich";
        case PhaseLabel::WinnerTakesAll: return "winner-takes-all";
    }
    return "?";
}

PhaseLabel classify_phase(const PhaseEvidence& evidence, const PhaseThresholds& thresholds) {
    if (!(evidence.gamma_hat >= 0.0)) throw std::invalid_argument("gamma_hat must be >= 0");
    if (evidence.gamma_hat < thresholds.gamma_sf &&
        evidence.fitness_spread < thresholds.spread_sf) {
        return PhaseLabel::ScaleFree;
    }
    if (evidence.gamma_hat > 1.0 && evidence.top_plateau_passed &&
        evidence.top_plateau_phi >= thresholds.phi_min) {
        return PhaseLabel::WinnerTakesAll;
    }
    return PhaseLabel::FitGetRich;
}

}  // namespace bbnet
