#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <vector>

#include "bbnet/fitness_law.hpp"
#include "bbnet/weighted_sampler.hpp"

using namespace bbnet;

TEST_CASE("pdf closed form") {
    CHECK(FitnessLaw(1.0).pdf(0.0) == doctest::Approx(2.0));
    CHECK(FitnessLaw(1.0).pdf(1.0) == doctest::Approx(0.0));
    CHECK(FitnessLaw(2.0).pdf(0.5) == doctest::Approx(0.75));
    CHECK_THROWS_AS(FitnessLaw(1.0).pdf(1.5), std::invalid_argument);
    CHECK_THROWS_AS(FitnessLaw(-0.5), std::invalid_argument);
}

TEST_CASE("cdf closed form") {
    for (double g : {0.0, 0.7, 3.0}) {
        CHECK(FitnessLaw(g).cdf(0.0) == doctest::Approx(0.0));
        CHECK(FitnessLaw(g).cdf(1.0) == doctest::Approx(1.0));
    }
    CHECK(FitnessLaw(1.0).cdf(0.5) == doctest::Approx(0.75));
}

TEST_CASE("pdf integrates to cdf") {
    // Simpson quadrature of the pdf as the independent route
    FitnessLaw law(1.7);
    for (double x = 0.1; x < 0.95; x += 0.1) {
        int steps = 2000;
        double h = x / steps;
        double sum = law.pdf(0.0) + law.pdf(x);
        for (int i = 1; i < steps; ++i) {
            sum += law.pdf(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
        }
        double integral = sum * h / 3.0;
        CHECK(integral == doctest::Approx(law.cdf(x)).epsilon(1e-6));
    }
}

TEST_CASE("sampler inverse transform") {
    CHECK(FitnessLaw(3.0).sample(0.0) == doctest::Approx(0.0));
    CHECK(FitnessLaw(0.0).sample(0.37) == doctest::Approx(0.37));  // uniform case
    CHECK(FitnessLaw(1.0).sample(0.75) == doctest::Approx(0.5));

    FitnessLaw law(2.3);
    for (double u : {0.01, 0.3, 0.5, 0.9, 0.999}) {
        CHECK(law.cdf(law.sample(u)) == doctest::Approx(u).epsilon(1e-12));
    }
}

TEST_CASE("fit_gamma closed form") {
    std::vector<double> two{0.5, 0.5};
    CHECK(fit_gamma(two) == doctest::Approx(2.0 / (2.0 * std::log(2.0)) - 1.0));

    std::vector<double> one{0.5};
    CHECK_THROWS_AS(fit_gamma(one), std::invalid_argument);
    std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(fit_gamma(zeros), std::invalid_argument);
    std::vector<double> with_one{0.3, 1.0};  // clipped, no ln(0)
    CHECK(std::isfinite(fit_gamma(with_one)));
}

TEST_CASE("fit round trip over gamma grid") {
    std::mt19937_64 rng(7);
    double prev_mean = 1.0;
    for (double gamma : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        FitnessLaw law(gamma);
        std::vector<double> samples(10000);
        double mean = 0.0;
        for (double& s : samples) {
            s = law.sample(uniform01(rng));
            mean += s;
        }
        mean /= static_cast<double>(samples.size());
        double gamma_hat = fit_gamma(samples);
        CHECK(std::fabs(gamma_hat - gamma) < 0.1);
        CHECK(mean == doctest::Approx(law.mean()).epsilon(0.05));
        CHECK(mean < prev_mean);  // larger gamma, stochastically smaller
        prev_mean = mean;
    }
    // uniform case lands near zero
    FitnessLaw uniform(0.0);
    std::vector<double> samples(10000);
    for (double& s : samples) s = uniform.sample(uniform01(rng));
    double gamma_hat = fit_gamma(samples);
    CHECK(gamma_hat >= 0.0);
    CHECK(gamma_hat < 0.05);
}
