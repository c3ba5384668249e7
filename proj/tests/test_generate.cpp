#include <doctest.h>

#include <stdexcept>

#include <sstream>
#include <vector>

#include "bbnet/edgelist.hpp"
#include "bbnet/generate.hpp"

#include "support/stats.hpp"

using namespace bbnet;

TEST_CASE("birth_degree follows the growth law") {
    CHECK(birth_degree(GrowthLaw{4.0, 0.0}, 100, 0.5) == 2);
    CHECK(birth_degree(GrowthLaw{4.0, 0.0}, 100, 1e-9) == 1);   // lower clamp
    CHECK(birth_degree(GrowthLaw{2.0, 0.5}, 100, 1.0) == 20);   // d = 2*sqrt(100)
    CHECK(birth_degree(GrowthLaw{1000.0, 0.0}, 5, 1.0) == 4);   // upper clamp n-1
    CHECK_THROWS_AS((birth_degree(GrowthLaw{4.0, 0.0}, 0, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS((birth_degree(GrowthLaw{4.0, 0.0}, 10, 1.5)), std::invalid_argument);
}

namespace {

void check_invariants(const EvolvingGraph& g) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < g.node_count(); ++i) sum += g.degree(static_cast<NodeIndex>(i));
    CHECK(sum == 2 * static_cast<std::int64_t>(g.edge_count()));
    for (const TimedEdge& e : g.edges()) {
        CHECK(e.a != e.b);
        CHECK(e.time >= g.node(e.a).birth_time);
        CHECK(e.time >= g.node(e.b).birth_time);
    }
}

}  // namespace

TEST_CASE("grow produces valid graphs for every variant") {
    for (auto variant : {ModelVariant::BA, ModelVariant::Fitness, ModelVariant::BirthBurst}) {
        ModelConfig cfg;
        cfg.variant = variant;
        cfg.n_target = 500;
        cfg.gamma = 1.0;
        cfg.alpha = 0.8;
        cfg.growth = GrowthLaw{4.0, 0.3};
        cfg.constant_m = 2;
        cfg.rng_seed = 5;
        auto g = grow(cfg);
        CHECK(g.node_count() == 500);
        check_invariants(g);
    }
}

TEST_CASE("stored birth_degree equals edge count at the birth step") {
    ModelConfig cfg;
    cfg.variant = ModelVariant::BirthBurst;
    cfg.n_target = 400;
    cfg.gamma = 1.5;
    cfg.alpha = 0.8;
    cfg.growth = GrowthLaw{4.0, 0.3};
    cfg.rng_seed = 9;
    auto g = grow(cfg);
    // internal edges connect pre-existing nodes only, so a node's degree at
    // its own birth time is exactly the edge count it brought
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        auto idx = static_cast<NodeIndex>(i);
        CHECK(g.degree_at(idx, g.node(idx).birth_time) == g.node(idx).birth_degree);
    }
}

TEST_CASE("same seed, same graph") {
    ModelConfig cfg;
    cfg.variant = ModelVariant::BirthBurst;
    cfg.n_target = 300;
    cfg.gamma = 2.0;
    cfg.alpha = 0.5;
    cfg.growth = GrowthLaw{3.0, 0.2};
    cfg.rng_seed = 77;
    auto g1 = grow(cfg);
    auto g2 = grow(cfg);
    std::ostringstream s1, s2;
    serialize_graph(g1, s1);
    serialize_graph(g2, s2);
    CHECK(s1.str() == s2.str());

    cfg.rng_seed = 78;
    std::ostringstream s3;
    serialize_graph(grow(cfg), s3);
    CHECK(s1.str() != s3.str());
}

TEST_CASE("degenerate birth-burst reduces to BA") {
    ModelConfig ba;
    ba.variant = ModelVariant::BA;
    ba.n_target = 4000;
    ba.constant_m = 3;
    ba.rng_seed = 21;
    auto gba = grow(ba);

    ModelConfig red;
    red.variant = ModelVariant::BirthBurst;
    red.n_target = 4000;
    red.equal_fitness = true;
    red.alpha = 1.0;
    red.growth = GrowthLaw{3.0, 0.0};  // m_i = round(3 * 1) = 3
    red.internal_edges = false;
    red.m0 = 3;
    red.rng_seed = 22;
    auto gred = grow(red);

    std::vector<double> da, db;
    for (std::size_t i = 0; i < gba.node_count(); ++i)
        da.push_back(static_cast<double>(gba.degree(static_cast<NodeIndex>(i))));
    for (std::size_t i = 0; i < gred.node_count(); ++i)
        db.push_back(static_cast<double>(gred.degree(static_cast<NodeIndex>(i))));
    CHECK(test_stats::ks_two_sample_p(da, db) > 0.01);
}

TEST_CASE("time_at_node_count maps counts to timestamps") {
    ModelConfig cfg;
    cfg.variant = ModelVariant::BA;
    cfg.n_target = 50;
    cfg.rng_seed = 1;
    auto g = grow(cfg);
    CHECK(time_at_node_count(g, 3) == 0);
    CHECK(time_at_node_count(g, 10) == 7);  // m0 = 3 seed nodes at t = 0
    CHECK(time_at_node_count(g, 50) == 47);
    CHECK_THROWS_AS((time_at_node_count(g, 51)), std::invalid_argument);
}
