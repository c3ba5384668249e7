#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <vector>

#include "bbnet/generate.hpp"
#include "bbnet/weighted_sampler.hpp"

using namespace bbnet;

TEST_CASE("weighted sampler tracks updates") {
    WeightedSampler s;
    for (double w : {1.0, 2.0, 3.0, 4.0}) s.push_back(w);
    CHECK(s.total() == doctest::Approx(10.0));
    s.set(1, 0.0);
    CHECK(s.total() == doctest::Approx(8.0));
    CHECK(s.positive_count() == 3);
    s.set(1, 5.0);
    CHECK(s.total() == doctest::Approx(13.0));

    // u -> index follows the cumulative weights exactly
    CHECK(s.sample(0.0) == 0);
    CHECK(s.sample(1.0 / 13.0 + 1e-12) == 1);
    CHECK(s.sample(6.0 / 13.0 + 1e-12) == 2);
    CHECK(s.sample(0.9999) == 3);
}

TEST_CASE("sampler frequencies match weights") {
    std::vector<double> weights{0.5, 0.0, 2.5, 1.0, 6.0};
    WeightedSampler s{std::span<const double>(weights)};
    std::mt19937_64 rng(11);
    std::vector<int> counts(weights.size(), 0);
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) counts[s.sample(rng)]++;
    CHECK(counts[1] == 0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double expect = weights[i] / s.total();
        CHECK(static_cast<double>(counts[i]) / draws == doctest::Approx(expect).epsilon(0.05));
    }
}

TEST_CASE("attachment_probabilities reproduces the kernel") {
    std::vector<std::int64_t> k{3, 1};
    std::vector<double> eta{1.0, 1.0};
    auto w = attachment_probabilities(k, eta, 1.0);
    CHECK(w.probability[0] == doctest::Approx(0.75));
    CHECK(w.probability[1] == doctest::Approx(0.25));

    std::vector<std::int64_t> k4{5, 1, 9, 2};
    std::vector<double> eta4{0.1, 0.9, 0.4, 0.7};
    auto uniform = attachment_probabilities(k4, eta4, 0.0);
    for (double p : uniform.probability) CHECK(p == doctest::Approx(0.25));

    std::vector<std::int64_t> keq{2, 2};
    std::vector<double> etaeq{0.6, 0.6};
    auto sym = attachment_probabilities(keq, etaeq, 1.0);
    CHECK(sym.probability[0] == doctest::Approx(0.5));
    CHECK(sym.probability[1] == doctest::Approx(0.5));

    std::vector<std::int64_t> kz{0, 0};
    std::vector<double> etaz{0.5, 0.5};
    CHECK_THROWS_AS((attachment_probabilities(kz, etaz, 1.0)), std::runtime_error);
}

TEST_CASE("sample_targets contract") {
    std::vector<double> weights{1.0, 2.0, 3.0, 4.0};
    std::mt19937_64 rng(3);

    auto all = sample_targets(weights, 4, {}, rng);
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<std::size_t>{0, 1, 2, 3});

    std::vector<std::size_t> excl{2};
    for (int i = 0; i < 200; ++i) {
        auto picks = sample_targets(weights, 3, excl, rng);
        CHECK(std::find(picks.begin(), picks.end(), 2u) == picks.end());
        std::sort(picks.begin(), picks.end());
        CHECK(std::unique(picks.begin(), picks.end()) == picks.end());
    }

    CHECK_THROWS_AS((sample_targets(weights, 4, excl, rng)), std::invalid_argument);
}

TEST_CASE("single-draw frequencies converge to exact probabilities") {
    // frozen 5-node graph with hand-set eta and k
    std::vector<std::int64_t> k{1, 2, 7, 20, 3};
    std::vector<double> eta{0.9, 0.2, 0.5, 1.0, 0.05};
    for (double alpha : {0.0, 0.5, 1.0}) {
        auto exact = attachment_probabilities(k, eta, alpha);
        WeightedSampler s{std::span<const double>(exact.weight)};
        std::mt19937_64 rng(1234);
        std::vector<int> counts(k.size(), 0);
        const int draws = 100000;
        for (int i = 0; i < draws; ++i) counts[s.sample(rng)]++;
        for (std::size_t i = 0; i < k.size(); ++i) {
            double freq = static_cast<double>(counts[i]) / draws;
            CHECK(std::fabs(freq - exact.probability[i]) < 0.01);
        }
    }
}
