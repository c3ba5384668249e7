#ifndef BBNET_FITNESS_LAW_HPP
#define BBNET_FITNESS_LAW_HPP

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace bbnet {

/// Fitness distribution f(eta) = (1 + gamma)(1 - eta)^gamma on [0,1].
/// gamma = 0 is the uniform distribution; gamma > 1 puts the generated
/// network into the condensed (winner-takes-all) regime.
struct FitnessLaw {
    double gamma = 0.0;

    explicit FitnessLaw(double g) : gamma(g) {
        if (!(g >= 0.0)) {
            throw std::invalid_argument("gamma must be >= 0, got " + std::to_string(g));
        }
    }

    double pdf(double eta) const {
        check_range(eta);
        return (1.0 + gamma) * std::pow(1.0 - eta, gamma);
    }

    double cdf(double eta) const {
        check_range(eta);
        return 1.0 - std::pow(1.0 - eta, 1.0 + gamma);
    }

    /// Inverse-transform sample: u in [0,1) -> eta with density pdf().
    double sample(double u) const {
        if (!(u >= 0.0 && u < 1.0)) {
            throw std::invalid_argument("u must be in [0,1)");
        }
        return 1.0 - std::pow(1.0 - u, 1.0 / (1.0 + gamma));
    }

    double mean() const { return 1.0 / (2.0 + gamma); }

private:
    static void check_range(double eta) {
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("eta out of [0,1]: " + std::to_string(eta));
        }
    }
};

/// Closed-form maximum-likelihood fit of gamma from samples in [0,1].
/// Samples at exactly 1 are clipped to 1 - 1e-9 (the normalized empirical
/// fitness always contains one value exactly 1). The estimate is floored at 0.
inline double fit_gamma(std::span<const double> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("fit_gamma needs at least 2 samples");
    }
    constexpr double kClip = 1.0 - 1e-9;
    double log_sum = 0.0;
    for (double eta : samples) {
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("fitness sample out of [0,1]");
        }
        log_sum += std::log(1.0 - std::min(eta, kClip));
    }
    if (log_sum == 0.0) {
        throw std::invalid_argument("fit_gamma undefined: all samples are zero");
    }
    double gamma_hat = -static_cast<double>(samples.size()) / log_sum - 1.0;
    return std::max(0.0, gamma_hat);
}

}  // namespace bbnet

#endif
