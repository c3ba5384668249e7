#include "bbnet/generate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bbnet/fitness_law.hpp"
#include "bbnet/weighted_sampler.hpp"

namespace bbnet {

double GrowthLaw::mean_degree(double n) const { return c * std::pow(n, beta); }

double GrowthLaw::target_edges(double n) const { return c * std::pow(n, 1.0 + beta) / 2.0; }

double attachment_weight(double eta, std::int64_t k, double alpha) {
    if (alpha == 0.0) return 1.0;  // uniform over existing nodes, 0^0 == 1
    double x = eta * static_cast<double>(k);
    if (x <= 0.0) return 0.0;
    if (alpha == 1.0) return x;
    return std::pow(x, alpha);
}

AttachmentWeights attachment_probabilities(std::span<const std::int64_t> degrees,
                                           std::span<const double> fitness, double alpha) {
    if (degrees.size() != fitness.size()) {
        throw std::invalid_argument("degree/fitness size mismatch");
    }
    if (degrees.empty()) {
        throw std::invalid_argument("attachment_probabilities on empty node set");
    }
    AttachmentWeights out;
    out.weight.resize(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        out.weight[i] = attachment_weight(fitness[i], degrees[i], alpha);
        out.total += out.weight[i];
    }
    if (!(out.total > 0.0)) {
        throw std::runtime_error("no eligible attachment target (all weights zero)");
    }
    out.probability.resize(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        out.probability[i] = out.weight[i] / out.total;
    }
    return out;
}

std::int64_t birth_degree(const GrowthLaw& growth, std::int64_t n, double eta) {
    if (n < 1) throw std::invalid_argument("birth_degree needs n >= 1");
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta out of [0,1]");
    double d = growth.mean_degree(static_cast<double>(n));
    auto m = static_cast<std::int64_t>(std::floor(d * eta + 0.5));
    std::int64_t hi = std::max<std::int64_t>(1, n - 1);
    return std::clamp<std::int64_t>(m, 1, hi);
}

std::vector<std::size_t> sample_targets(std::span<const double> weights, std::size_t count,
                                        std::span<const std::size_t> exclusions,
                                        std::mt19937_64& rng) {
    WeightedSampler sampler(weights);
    for (std::size_t i : exclusions) {
        if (i >= sampler.size()) throw std::invalid_argument("exclusion index out of range");
        sampler.set(i, 0.0);
    }
    if (count > sampler.positive_count()) {
        throw std::invalid_argument("infeasible count: " + std::to_string(count) + " > " +
                                    std::to_string(sampler.positive_count()) + " eligible");
    }
    std::vector<std::size_t> out;
    out.reserve(count);
    while (out.size() < count) {
        std::size_t pick = sampler.sample(rng);
        sampler.set(pick, 0.0);
        out.push_back(pick);
    }
    return out;
}

namespace {

void validate(const ModelConfig& cfg, std::int64_t m0) {
    if (m0 < 2) throw std::invalid_argument("seed graph needs m0 >= 2");
    if (cfg.seed_graph == SeedGraphKind::Ring && m0 < 3) {
        throw std::invalid_argument("ring seed needs m0 >= 3");
    }
    if (cfg.n_target < m0) throw std::invalid_argument("n_target smaller than seed size");
    if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) throw std::invalid_argument("alpha out of [0,1]");
    if (cfg.variant != ModelVariant::BirthBurst) {
        if (cfg.constant_m < 1 || cfg.constant_m > m0) {
            throw std::invalid_argument("constant m must be in [1, m0]");
        }
    } else {
        if (!(cfg.growth.c > 0.0)) throw std::invalid_argument("growth c must be > 0");
        if (!(cfg.growth.beta >= 0.0)) throw std::invalid_argument("growth beta must be >= 0");
    }
}

}  // namespace

EvolvingGraph grow(const ModelConfig& cfg) {
    std::int64_t m0 = cfg.m0 > 0 ? cfg.m0 : std::max<std::int64_t>(3, cfg.constant_m);
    validate(cfg, m0);

    const bool burst = cfg.variant == ModelVariant::BirthBurst;
    const bool unit_fitness = cfg.variant == ModelVariant::BA || cfg.equal_fitness;
    const double alpha = burst ? cfg.alpha : 1.0;
    FitnessLaw law(unit_fitness ? 0.0 : cfg.gamma);
    std::mt19937_64 rng(cfg.rng_seed);

    EvolvingGraph graph;
    WeightedSampler sampler;
    auto draw_eta = [&] { return unit_fitness ? 1.0 : law.sample(uniform01(rng)); };
    auto refresh = [&](NodeIndex i) {
        sampler.set(static_cast<std::size_t>(i),
                    attachment_weight(graph.node(i).fitness, graph.degree(i), alpha));
    };

    for (std::int64_t i = 0; i < m0; ++i) {
        graph.add_node(std::to_string(i), 0, draw_eta());
    }
    if (cfg.seed_graph == SeedGraphKind::Complete) {
        for (NodeIndex a = 0; a < m0; ++a)
            for (NodeIndex b = a + 1; b < m0; ++b) graph.add_edge(a, b, 0);
    } else {
        for (NodeIndex a = 0; a < m0; ++a) {
            graph.add_edge(a, static_cast<NodeIndex>((a + 1) % m0), 0);
        }
    }
    for (NodeIndex i = 0; i < m0; ++i) {
        graph.set_birth_degree(i, graph.degree(i));
        sampler.push_back(attachment_weight(graph.node(i).fitness, graph.degree(i), alpha));
    }

    std::vector<std::size_t> targets;
    std::vector<double> saved;
    while (static_cast<std::int64_t>(graph.node_count()) < cfg.n_target) {
        auto n = static_cast<std::int64_t>(graph.node_count());
        Timestamp t = n - m0 + 1;

        double eta = draw_eta();
        std::int64_t m = burst ? birth_degree(cfg.growth, n, eta) : cfg.constant_m;
        m = std::min<std::int64_t>(m, static_cast<std::int64_t>(sampler.positive_count()));

        // draw-and-remove m distinct targets, then restore the weights
        targets.clear();
        saved.clear();
        for (std::int64_t j = 0; j < m; ++j) {
            std::size_t pick = sampler.sample(rng);
            targets.push_back(pick);
            saved.push_back(sampler.weight(pick));
            sampler.set(pick, 0.0);
        }
        for (std::size_t j = 0; j < targets.size(); ++j) sampler.set(targets[j], saved[j]);

        NodeIndex fresh = graph.add_node(std::to_string(n), t, eta);
        for (std::size_t pick : targets) {
            graph.add_edge(fresh, static_cast<NodeIndex>(pick), t);
            refresh(static_cast<NodeIndex>(pick));
        }
        graph.set_birth_degree(fresh, m);

        // internal edges connect pre-existing nodes only; the new node joins
        // the sampler afterwards
        if (burst && cfg.internal_edges) {
            std::int64_t budget = std::llround(cfg.growth.target_edges(static_cast<double>(n + 1)) -
                                              cfg.growth.target_edges(static_cast<double>(n)));
            std::int64_t extra = std::max<std::int64_t>(0, budget - m);
            for (std::int64_t e = 0; e < extra; ++e) {
                for (int attempt = 0; attempt < 100; ++attempt) {
                    std::size_t a = sampler.sample(rng);
                    double wa = sampler.weight(a);
                    sampler.set(a, 0.0);
                    if (!(sampler.total() > 0.0) && sampler.positive_count() == 0) {
                        sampler.set(a, wa);
                        break;
                    }
                    std::size_t b = sampler.sample(rng);
                    sampler.set(a, wa);
                    if (graph.has_edge(static_cast<NodeIndex>(a), static_cast<NodeIndex>(b))) {
                        continue;
                    }
                    graph.add_edge(static_cast<NodeIndex>(a), static_cast<NodeIndex>(b), t);
                    refresh(static_cast<NodeIndex>(a));
                    refresh(static_cast<NodeIndex>(b));
                    break;
                }
            }
        }
        sampler.push_back(attachment_weight(eta, graph.degree(fresh), alpha));
    }
    return graph;
}

Timestamp time_at_node_count(const EvolvingGraph& graph, std::int64_t n) {
    if (n < 1 || n > static_cast<std::int64_t>(graph.node_count())) {
        throw std::invalid_argument("node count out of range");
    }
    return graph.node(static_cast<NodeIndex>(n - 1)).birth_time;
}

}  // namespace bbnet
