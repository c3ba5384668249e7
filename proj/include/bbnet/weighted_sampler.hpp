#ifndef BBNET_WEIGHTED_SAMPLER_HPP
#define BBNET_WEIGHTED_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace bbnet {

/// Deterministic 53-bit uniform in [0,1) from a 64-bit engine draw.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Fenwick-tree sampler over non-negative weights: O(log n) weight update,
/// O(log n) draw. Weights change on every growth step (degrees increment),
/// so a rebuild-per-step cumulative array would be O(n^2) over a run.
class WeightedSampler {
public:
    WeightedSampler() = default;
    explicit WeightedSampler(std::span<const double> weights) {
        for (double w : weights) push_back(w);
    }

    std::size_t size() const { return weights_.size(); }
    double total() const { return total_; }
    double weight(std::size_t i) const { return weights_.at(i); }
    std::size_t positive_count() const { return positive_; }

    void push_back(double w) {
        check_weight(w);
        weights_.push_back(0.0);
        tree_.push_back(0.0);
        // fold covered siblings into the new tree slot
        std::size_t i = weights_.size();  // 1-based
        std::size_t lowbit = i & (~i + 1);
        for (std::size_t j = i - 1; j > i - lowbit; j -= j & (~j + 1)) {
            tree_[i - 1] += tree_[j - 1];
        }
        set(weights_.size() - 1, w);
    }

    void set(std::size_t i, double w) {
        check_weight(w);
        double delta = w - weights_.at(i);
        if (weights_[i] > 0.0 && w == 0.0) --positive_;
        if (weights_[i] == 0.0 && w > 0.0) ++positive_;
        weights_[i] = w;
        total_ += delta;
        for (std::size_t j = i + 1; j <= tree_.size(); j += j & (~j + 1)) {
            tree_[j - 1] += delta;
        }
    }

    /// Index with cumulative weight bracketing u * total, u in [0,1).
    std::size_t sample(double u) const {
        if (!(total_ > 0.0)) {
            throw std::runtime_error("sample on empty weight set");
        }
        double target = u * total_;
        std::size_t pos = 0;  // 1-based prefix position
        std::size_t mask = 1;
        while ((mask << 1) <= tree_.size()) mask <<= 1;
        for (; mask != 0; mask >>= 1) {
            std::size_t next = pos + mask;
            if (next <= tree_.size() && tree_[next - 1] < target) {
                pos = next;
                target -= tree_[next - 1];
            }
        }
        std::size_t idx = pos;  // 0-based result
        // float rounding can land on a zero weight at the boundary
        while (idx < weights_.size() && weights_[idx] == 0.0) ++idx;
        if (idx >= weights_.size()) {
            for (idx = weights_.size(); idx > 0 && weights_[idx - 1] == 0.0;) --idx;
            if (idx == 0) throw std::runtime_error("no positive weight to sample");
            --idx;
        }
        return idx;
    }

    std::size_t sample(std::mt19937_64& rng) const { return sample(uniform01(rng)); }

private:
    static void check_weight(double w) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("weights must be non-negative and finite");
        }
    }

    std::vector<double> weights_;
    std::vector<double> tree_;
    double total_ = 0.0;
    std::size_t positive_ = 0;
};

}  // namespace bbnet

#endif
