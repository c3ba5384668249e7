#ifndef BBNET_GENERATE_HPP
#define BBNET_GENERATE_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bbnet/graph.hpp"

namespace bbnet {

/// Average degree per node as a function of node count: d(n) = c * n^beta.
struct GrowthLaw {
    double c = 4.0;
    double beta = 0.0;

    double mean_degree(double n) const;
    /// Target cumulative edge total at node count n: c * n^(1+beta) / 2.
    double target_edges(double n) const;
};

enum class ModelVariant { BA, Fitness, BirthBurst };
enum class SeedGraphKind { Complete, Ring };

struct ModelConfig {
    ModelVariant variant = ModelVariant::BirthBurst;
    std::int64_t n_target = 10000;
    double gamma = 1.0;        // fitness law parameter (Fitness / BirthBurst)
    bool equal_fitness = false;  // force eta == 1 for every node
    double alpha = 1.0;        // attachment suppression exponent (BirthBurst)
    GrowthLaw growth{};        // BirthBurst birth-degree / edge-budget law
    std::int64_t constant_m = 2;  // edges per new node (BA / Fitness)
    bool internal_edges = true;   // BirthBurst edge-budget top-up
    SeedGraphKind seed_graph = SeedGraphKind::Complete;
    std::int64_t m0 = 0;       // seed size; 0 means max(3, constant_m)
    std::uint64_t rng_seed = 0;
};

/// Attachment kernel over a frozen set of nodes: w_i = (eta_i * k_i)^alpha,
/// Pi_i = w_i / W. alpha = 1 is the plain fitness kernel; alpha = 0 is
/// uniform over eligible nodes (0^0 taken as 1).
struct AttachmentWeights {
    std::vector<double> weight;
    std::vector<double> probability;
    double total = 0.0;
};

double attachment_weight(double eta, std::int64_t k, double alpha);

AttachmentWeights attachment_probabilities(std::span<const std::int64_t> degrees,
                                           std::span<const double> fitness, double alpha);

/// Birth degree of a node with fitness eta joining a network of n nodes:
/// round-half-up of d(n) * eta, clamped to [1, n-1].
std::int64_t birth_degree(const GrowthLaw& growth, std::int64_t n, double eta);

/// `count` distinct non-excluded indices, drawn without replacement
/// proportionally to `weights` (draw-and-remove).
std::vector<std::size_t> sample_targets(std::span<const double> weights, std::size_t count,
                                        std::span<const std::size_t> exclusions,
                                        std::mt19937_64& rng);

/// Grow a network to config.n_target nodes. Deterministic for a fixed config:
/// per step the generator consumes randomness in a fixed order (fitness draw,
/// then target draws, then internal-edge draws).
EvolvingGraph grow(const ModelConfig& config);

/// Snapshot timestamp at which the generated graph first has `n` nodes.
Timestamp time_at_node_count(const EvolvingGraph& graph, std::int64_t n);

}  // namespace bbnet

#endif
