#ifndef BBNET_ANALYSIS_HPP
#define BBNET_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bbnet/graph.hpp"

namespace bbnet {

struct HistogramBin {
    double lower = 0.0;  // [lower, upper)
    double upper = 0.0;
    std::int64_t count = 0;
    double density = 0.0;  // count / (bin width * counted nodes)
};

/// Log-binned degree histogram over nodes with k >= 1.
struct DegreeHistogram {
    double base = 2.0;
    std::int64_t counted = 0;
    std::vector<HistogramBin> bins;  // contiguous cover of [1, k_max], empties kept
};

DegreeHistogram degree_histogram(const Snapshot& snapshot, double base = 2.0);

/// Global log-log slope plus the two-half slope difference: curvature < 0
/// means the distribution bends down (sublinear shape) on log-log axes.
struct SlopeFit {
    double slope = 0.0;
    double curvature = 0.0;
    double residual = 0.0;
};

SlopeFit slope_and_curvature(const DegreeHistogram& hist);

/// Log-log slope of the complementary cumulative degree distribution,
/// evaluated at powers of `base`.
double ccdf_log_slope(const Snapshot& snapshot, double base = 2.0);

struct HubTrajectory {
    NodeIndex node = 0;
    std::int64_t final_degree = 0;
    std::vector<TrajectoryPoint> points;
};

/// Top `top_n` nodes by degree at the last of `times`, with their degree
/// fraction time series.
std::vector<HubTrajectory> top_hub_trajectories(const EvolvingGraph& graph,
                                                std::span<const Timestamp> times, int top_n);

struct BurstParams {
    double theta = 0.5;          // jump must be >= theta * final degree
    double eps = 0.1;            // pre-burst degree must be <= eps * final degree
    double plateau_window = 0.5; // trailing fraction of snapshots tested for plateau
    double tau = 0.25;           // (max phi - min phi) / mean phi tolerance
};

struct BurstEvent {
    std::size_t index = 0;  // snapshot index of the jump
    Timestamp time = 0;
    std::int64_t jump = 0;
    std::int64_t pre_degree = 0;
    double plateau_phi = 0.0;  // mean degree fraction over the trailing window
    bool plateau_passed = false;
};

std::vector<BurstEvent> detect_bursts(const std::vector<TrajectoryPoint>& trajectory,
                                      const BurstParams& params = {});

/// Plateau test alone: degree fraction stable over the trailing window.
struct PlateauStats {
    double mean_phi = 0.0;
    double rel_spread = 0.0;
    bool passed = false;
};

PlateauStats plateau_stats(const std::vector<TrajectoryPoint>& trajectory, double window,
                           double tau);

enum class PhaseLabel { ScaleFree, FitGetRich, WinnerTakesAll };

std::string to_string(PhaseLabel label);

struct PhaseThresholds {
    double gamma_sf = 0.1;       // gamma below this counts as degenerate
    double spread_sf = 0.05;     // fitness spread below this counts as degenerate
    double phi_min = 0.01;       // minimal condensed degree fraction
};

struct PhaseEvidence {
    double gamma_hat = 0.0;
    double fitness_spread = 0.0;  // max - min of the fitness values
    bool top_plateau_passed = false;
    double top_plateau_phi = 0.0;
};

PhaseLabel classify_phase(const PhaseEvidence& evidence, const PhaseThresholds& thresholds = {});

}  // namespace bbnet

#endif
