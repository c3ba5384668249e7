#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "bbnet/analysis.hpp"
#include "bbnet/edgelist.hpp"
#include "bbnet/estimate.hpp"
#include "bbnet/fitness_law.hpp"
#include "bbnet/generate.hpp"

namespace {

constexpr const char* kVersion = "bbnet 0.1.0";

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            stream = &file;
        }
    }
    std::ostream& out() { return *stream; }
};

struct EdgeInput {
    std::string path;
    bbnet::ColumnMap colmap;
    std::string delim = "\t";

    void attach(CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--edges", path, "timestamped edge list file");
        if (required) opt->required();
        cmd->add_option("--col-a", colmap.col_a, "column index of interactor A");
        cmd->add_option("--col-b", colmap.col_b, "column index of interactor B");
        cmd->add_option("--col-t", colmap.col_t, "column index of the timestamp");
        cmd->add_option("--delim", delim, "field delimiter (single character)");
        cmd->add_option("--skip-header", colmap.skip_header, "number of header lines to skip");
    }

    bbnet::BuiltGraph load() {
        if (delim.size() != 1) throw std::runtime_error("--delim must be one character");
        colmap.delimiter = delim[0];
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open edge list: " + path);
        auto parsed = bbnet::parse_edges(in, colmap);
        if (parsed.self_loops_dropped > 0) {
            std::cerr << "warning: dropped " << parsed.self_loops_dropped << " self-loop(s)\n";
        }
        return bbnet::build_graph(parsed.edges);
    }
};

std::vector<std::string> provenance(const std::string& command,
                                    const std::vector<std::pair<std::string, std::string>>& kv) {
    std::vector<std::string> lines;
    lines.push_back(kVersion);
    lines.push_back("command: " + command);
    for (const auto& [k, v] : kv) lines.push_back(k + "=" + v);
    return lines;
}

void emit_comments(std::ostream& out, const std::vector<std::string>& lines) {
    for (const std::string& l : lines) out << "# " << l << "\n";
}

bbnet::FitnessEstimate fitness_from_metadata(const bbnet::EvolvingGraph& graph,
                                             const std::string& meta_path, bbnet::Timestamp t1,
                                             bbnet::Timestamp t2, std::int64_t k_min) {
    std::ifstream in(meta_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open metadata file: " + meta_path);
    auto records = bbnet::parse_node_metadata(in);
    bbnet::FitnessEstimate est;
    est.t1 = t1;
    est.t2 = t2;
    est.k_min = k_min;
    double peak = 0.0;
    for (const auto& rec : records) {
        if (rec.fitness < 0.0 || !graph.has_node(rec.id)) continue;
        auto idx = graph.index_of(rec.id);
        if (graph.degree_at(idx, t1) < k_min) continue;
        est.node.push_back(idx);
        est.eta.push_back(rec.fitness);
        peak = std::max(peak, rec.fitness);
    }
    if (est.node.empty() || !(peak > 0.0)) {
        throw std::runtime_error("metadata file carries no usable fitness values");
    }
    for (double& v : est.eta) v /= peak;
    return est;
}

struct GenerateArgs {
    std::string model;
    std::int64_t n = 10000;
    std::int64_t m = 2;
    double gamma = 1.0;
    double alpha = 1.0;
    double c = 4.0;
    double beta = 0.0;
    std::uint64_t seed = 0;
    std::string seed_graph = "complete";
    std::int64_t m0 = 0;
    std::string out;
    std::string meta_out;

    bbnet::ModelConfig config() const {
        bbnet::ModelConfig cfg;
        if (model == "ba") cfg.variant = bbnet::ModelVariant::BA;
        else if (model == "fitness") cfg.variant = bbnet::ModelVariant::Fitness;
        else if (model == "birth-burst") cfg.variant = bbnet::ModelVariant::BirthBurst;
        else throw std::runtime_error("unknown model: " + model);
        cfg.n_target = n;
        cfg.constant_m = m;
        cfg.gamma = gamma;
        cfg.alpha = alpha;
        cfg.growth = bbnet::GrowthLaw{c, beta};
        cfg.rng_seed = seed;
        cfg.seed_graph = seed_graph == "ring" ? bbnet::SeedGraphKind::Ring
                                             : bbnet::SeedGraphKind::Complete;
        cfg.m0 = m0;
        return cfg;
    }

    std::vector<std::pair<std::string, std::string>> echo() const {
        return {{"model", model},        {"n", std::to_string(n)},
                {"m", std::to_string(m)}, {"gamma", fmt(gamma)},
                {"alpha", fmt(alpha)},    {"c", fmt(c)},
                {"beta", fmt(beta)},      {"seed", std::to_string(seed)},
                {"seed-graph", seed_graph}, {"m0", std::to_string(m0)}};
    }
};

int run_generate(const GenerateArgs& args) {
    bbnet::EvolvingGraph graph = bbnet::grow(args.config());
    auto header = provenance("generate", args.echo());
    {
        Output out(args.out);
        bbnet::serialize_graph(graph, out.out(), header);
    }
    std::string meta = args.meta_out.empty() ? args.out + ".meta" : args.meta_out;
    {
        Output out(meta);
        bbnet::serialize_node_metadata(graph, out.out(), header);
    }
    return 0;
}

std::vector<bbnet::Timestamp> snapshot_schedule(const bbnet::BuiltGraph& built) {
    return built.snapshot_times;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"birth-burst network simulator and estimation toolkit"};
    app.require_subcommand(1);

    // generate
    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "grow a synthetic network");
    generate->add_option("--model", gen.model, "ba | fitness | birth-burst")->required();
    generate->add_option("--n", gen.n, "target node count")->required();
    generate->add_option("--m", gen.m, "edges per new node (ba/fitness)");
    generate->add_option("--gamma", gen.gamma, "fitness distribution exponent");
    generate->add_option("--alpha", gen.alpha, "attachment suppression exponent");
    generate->add_option("--c", gen.c, "growth law constant");
    generate->add_option("--beta", gen.beta, "growth law exponent");
    generate->add_option("--seed", gen.seed, "rng seed");
    generate->add_option("--seed-graph", gen.seed_graph, "complete | ring");
    generate->add_option("--m0", gen.m0, "seed graph size (0 = auto)");
    generate->add_option("--out", gen.out, "edge list output path")->required();
    generate->add_option("--meta-out", gen.meta_out, "node metadata output path");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "inverse pipeline estimators");
    estimate->require_subcommand(1);

    struct {
        EdgeInput edges;
        bbnet::Timestamp a = 0, b = 0;
        std::int64_t kmin = 5;
        std::string out, meta;
    } efit;
    auto* est_fitness = estimate->add_subcommand("fitness", "measure relative fitness");
    efit.edges.attach(est_fitness);
    est_fitness->add_option("--snapshot-a", efit.a, "mature snapshot time")->required();
    est_fitness->add_option("--snapshot-b", efit.b, "following snapshot time")->required();
    est_fitness->add_option("--kmin", efit.kmin, "minimal degree at snapshot-a");
    est_fitness->add_option("--out", efit.out, "output path (default stdout)");

    struct {
        EdgeInput edges;
        std::string out;
    } egrow;
    auto* est_growth = estimate->add_subcommand("growth", "fit d = c n^beta");
    egrow.edges.attach(est_growth);
    est_growth->add_option("--out", egrow.out, "output path (default stdout)");

    struct {
        EdgeInput edges;
        bbnet::Timestamp a = 0, b = 0;
        std::int64_t kmin = 5;
        std::string out, meta;
    } ealpha;
    auto* est_alpha = estimate->add_subcommand("alpha", "fit the suppression exponent");
    ealpha.edges.attach(est_alpha);
    est_alpha->add_option("--snapshot-a", ealpha.a, "window start")->required();
    est_alpha->add_option("--snapshot-b", ealpha.b, "window end")->required();
    est_alpha->add_option("--kmin", ealpha.kmin, "minimal degree at window start");
    est_alpha->add_option("--meta", ealpha.meta,
                          "node metadata file supplying known fitness values");
    est_alpha->add_option("--out", ealpha.out, "output path (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "characterization toolkit");
    analyze->require_subcommand(1);

    struct {
        EdgeInput edges;
        bbnet::Timestamp at = 0;
        bool has_at = false;
        double base = 2.0;
        std::string out;
    } adist;
    auto* an_dist = analyze->add_subcommand("degree-dist", "log-binned degree histogram");
    adist.edges.attach(an_dist);
    auto* at_opt = an_dist->add_option("--at", adist.at, "snapshot time (default: final)");
    an_dist->add_option("--bins-base", adist.base, "log bin base");
    an_dist->add_option("--out", adist.out, "output path (default stdout)");

    struct {
        EdgeInput edges;
        int top = 4;
        std::string out;
    } ahubs;
    auto* an_hubs = analyze->add_subcommand("hubs", "hub degree-fraction trajectories");
    ahubs.edges.attach(an_hubs);
    an_hubs->add_option("--top", ahubs.top, "number of hubs");
    an_hubs->add_option("--out", ahubs.out, "output path (default stdout)");

    struct {
        EdgeInput edges;
        int top = 4;
        bbnet::BurstParams params;
        std::string out;
    } abursts;
    auto* an_bursts = analyze->add_subcommand("bursts", "degree bursts of the hub nodes");
    abursts.edges.attach(an_bursts);
    an_bursts->add_option("--top", abursts.top, "number of hubs");
    an_bursts->add_option("--theta", abursts.params.theta, "jump threshold fraction");
    an_bursts->add_option("--eps", abursts.params.eps, "pre-burst degree fraction");
    an_bursts->add_option("--tau", abursts.params.tau, "plateau tolerance");
    an_bursts->add_option("--out", abursts.out, "output path (default stdout)");

    struct {
        EdgeInput edges;
        bbnet::Timestamp a = 0, b = 0;
        std::int64_t kmin = 5;
        bbnet::PhaseThresholds thresholds;
        bbnet::BurstParams params;
        std::string out, meta;
    } aphase;
    auto* an_phase = analyze->add_subcommand("phase", "scale-free / fit-get-rich / winner-takes-all");
    aphase.edges.attach(an_phase);
    an_phase->add_option("--snapshot-a", aphase.a, "fitness window start")->required();
    an_phase->add_option("--snapshot-b", aphase.b, "fitness window end")->required();
    an_phase->add_option("--kmin", aphase.kmin, "minimal degree at window start");
    an_phase->add_option("--phi-min", aphase.thresholds.phi_min, "minimal condensed fraction");
    an_phase->add_option("--tau", aphase.params.tau, "plateau tolerance");
    an_phase->add_option("--meta", aphase.meta, "node metadata file supplying known fitness");
    an_phase->add_option("--out", aphase.out, "output path (default stdout)");

    // compare
    struct {
        std::int64_t n = 10000;
        std::int64_t m = 2;
        double gamma = 1.0;
        double alpha = 1.0;
        double c = 4.0;
        double beta = 0.3;
        std::uint64_t seed = 0;
        std::string out;
    } cmp;
    auto* compare = app.add_subcommand("compare", "ba vs fitness vs birth-burst summary");
    compare->add_option("--n", cmp.n, "target node count");
    compare->add_option("--m", cmp.m, "edges per new node (ba/fitness)");
    compare->add_option("--gamma", cmp.gamma, "fitness distribution exponent");
    compare->add_option("--alpha", cmp.alpha, "suppression exponent (birth-burst)");
    compare->add_option("--c", cmp.c, "growth law constant");
    compare->add_option("--beta", cmp.beta, "growth law exponent");
    compare->add_option("--seed", cmp.seed, "rng seed");
    compare->add_option("--out", cmp.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*generate) return run_generate(gen);

        if (*est_fitness) {
            auto built = efit.edges.load();
            auto est = bbnet::measure_fitness(built.graph, efit.a, efit.b, efit.kmin);
            double gamma_hat = bbnet::fit_gamma(est.eta);
            Output out(efit.out);
            emit_comments(out.out(), provenance("estimate fitness",
                                                {{"edges", efit.edges.path},
                                                 {"snapshot-a", std::to_string(efit.a)},
                                                 {"snapshot-b", std::to_string(efit.b)},
                                                 {"kmin", std::to_string(efit.kmin)},
                                                 {"gamma_hat", fmt(gamma_hat)}}));
            out.out() << "node,eta\n";
            for (std::size_t i = 0; i < est.node.size(); ++i) {
                out.out() << built.graph.node(est.node[i]).id << "," << fmt(est.eta[i]) << "\n";
            }
            return 0;
        }

        if (*est_growth) {
            auto built = egrow.edges.load();
            auto fit = bbnet::fit_growth(built.graph, built.snapshot_times);
            Output out(egrow.out);
            emit_comments(out.out(),
                          provenance("estimate growth", {{"edges", egrow.edges.path}}));
            out.out() << "c_hat=" << fmt(fit.c_hat) << "\n"
                      << "beta_hat=" << fmt(fit.beta_hat) << "\n"
                      << "residual=" << fmt(fit.residual) << "\n"
                      << "points=" << fit.points.size() << "\n";
            return 0;
        }

        if (*est_alpha) {
            auto built = ealpha.edges.load();
            bbnet::FitnessEstimate est =
                ealpha.meta.empty()
                    ? bbnet::measure_fitness(built.graph, ealpha.a, ealpha.b, ealpha.kmin)
                    : fitness_from_metadata(built.graph, ealpha.meta, ealpha.a, ealpha.b,
                                            ealpha.kmin);
            auto fit = bbnet::estimate_alpha(built.graph, ealpha.a, ealpha.b, est);
            Output out(ealpha.out);
            auto header = provenance("estimate alpha",
                                     {{"edges", ealpha.edges.path},
                                      {"snapshot-a", std::to_string(ealpha.a)},
                                      {"snapshot-b", std::to_string(ealpha.b)},
                                      {"kmin", std::to_string(ealpha.kmin)},
                                      {"fitness-source", ealpha.meta.empty() ? "measured" : "metadata"}});
            if (ealpha.meta.empty()) {
                header.push_back(
                    "note: fitness measured from the same growth window is kernel-confounded; "
                    "alpha_hat is biased toward 1 — prefer --meta when true fitness is known");
            }
            emit_comments(out.out(), header);
            out.out() << "alpha_hat=" << fmt(fit.alpha_hat) << "\n"
                      << "raw_slope=" << fmt(fit.raw_slope) << "\n"
                      << "events=" << fit.events << "\n"
                      << "bins=" << fit.bins_used << "\n";
            return 0;
        }

        if (*an_dist) {
            adist.has_at = at_opt->count() > 0;
            auto built = adist.edges.load();
            bbnet::Timestamp at = adist.has_at ? adist.at : built.graph.last_time();
            auto hist = bbnet::degree_histogram(built.graph.snapshot_at(at), adist.base);
            Output out(adist.out);
            emit_comments(out.out(), provenance("analyze degree-dist",
                                                {{"edges", adist.edges.path},
                                                 {"at", std::to_string(at)},
                                                 {"bins-base", fmt(adist.base)}}));
            out.out() << "bin_lower,bin_upper,count,density\n";
            for (const auto& bin : hist.bins) {
                if (bin.count == 0) continue;
                out.out() << fmt(bin.lower) << "," << fmt(bin.upper) << "," << bin.count << ","
                          << fmt(bin.density) << "\n";
            }
            return 0;
        }

        if (*an_hubs) {
            auto built = ahubs.edges.load();
            auto times = snapshot_schedule(built);
            auto hubs = bbnet::top_hub_trajectories(built.graph, times, ahubs.top);
            Output out(ahubs.out);
            emit_comments(out.out(), provenance("analyze hubs", {{"edges", ahubs.edges.path},
                                                                 {"top", std::to_string(ahubs.top)}}));
            out.out() << "node,time,degree,fraction\n";
            for (const auto& hub : hubs) {
                const std::string& id = built.graph.node(hub.node).id;
                for (const auto& p : hub.points) {
                    out.out() << id << "," << p.time << "," << p.degree << ","
                              << (p.fraction ? fmt(*p.fraction) : std::string("-")) << "\n";
                }
            }
            return 0;
        }

        if (*an_bursts) {
            auto built = abursts.edges.load();
            auto times = snapshot_schedule(built);
            auto hubs = bbnet::top_hub_trajectories(built.graph, times, abursts.top);
            Output out(abursts.out);
            emit_comments(out.out(),
                          provenance("analyze bursts",
                                     {{"edges", abursts.edges.path},
                                      {"top", std::to_string(abursts.top)},
                                      {"theta", fmt(abursts.params.theta)},
                                      {"eps", fmt(abursts.params.eps)},
                                      {"tau", fmt(abursts.params.tau)}}));
            out.out() << "node,time,jump,pre_degree,plateau_phi,plateau_passed\n";
            for (const auto& hub : hubs) {
                auto events = bbnet::detect_bursts(hub.points, abursts.params);
                const std::string& id = built.graph.node(hub.node).id;
                for (const auto& ev : events) {
                    out.out() << id << "," << ev.time << "," << ev.jump << "," << ev.pre_degree
                              << "," << fmt(ev.plateau_phi) << "," << (ev.plateau_passed ? 1 : 0)
                              << "\n";
                }
            }
            return 0;
        }

        if (*an_phase) {
            auto built = aphase.edges.load();
            bbnet::FitnessEstimate est =
                aphase.meta.empty()
                    ? bbnet::measure_fitness(built.graph, aphase.a, aphase.b, aphase.kmin)
                    : fitness_from_metadata(built.graph, aphase.meta, aphase.a, aphase.b,
                                            aphase.kmin);
            double gamma_hat = bbnet::fit_gamma(est.eta);
            double lo = est.eta.empty() ? 0.0 : est.eta[0], hi = lo;
            for (double v : est.eta) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            auto times = snapshot_schedule(built);
            auto hubs = bbnet::top_hub_trajectories(built.graph, times, 1);
            auto plateau = bbnet::plateau_stats(hubs[0].points, aphase.params.plateau_window,
                                               aphase.params.tau);
            bbnet::PhaseEvidence ev{gamma_hat, hi - lo, plateau.passed, plateau.mean_phi};
            auto label = bbnet::classify_phase(ev, aphase.thresholds);
            Output out(aphase.out);
            emit_comments(out.out(),
                          provenance("analyze phase",
                                     {{"edges", aphase.edges.path},
                                      {"snapshot-a", std::to_string(aphase.a)},
                                      {"snapshot-b", std::to_string(aphase.b)},
                                      {"kmin", std::to_string(aphase.kmin)},
                                      {"fitness-source", aphase.meta.empty() ? "measured" : "metadata"}}));
            out.out() << "gamma_hat=" << fmt(gamma_hat) << "\n"
                      << "fitness_spread=" << fmt(hi - lo) << "\n"
                      << "top_phi=" << fmt(plateau.mean_phi) << "\n"
                      << "plateau_passed=" << (plateau.passed ? 1 : 0) << "\n"
                      << "phase=" << bbnet::to_string(label) << "\n";
            return 0;
        }

        if (*compare) {
            Output out(cmp.out);
            emit_comments(out.out(),
                          provenance("compare", {{"n", std::to_string(cmp.n)},
                                                 {"m", std::to_string(cmp.m)},
                                                 {"gamma", fmt(cmp.gamma)},
                                                 {"alpha", fmt(cmp.alpha)},
                                                 {"c", fmt(cmp.c)},
                                                 {"beta", fmt(cmp.beta)},
                                                 {"seed", std::to_string(cmp.seed)}}));
            out.out() << "model,slope,curvature,top_phi,plateau_passed,phase\n";
            for (const char* model : {"ba", "fitness", "birth-burst"}) {
                bbnet::ModelConfig cfg;
                cfg.variant = std::string(model) == "ba" ? bbnet::ModelVariant::BA
                              : std::string(model) == "fitness" ? bbnet::ModelVariant::Fitness
                                                                : bbnet::ModelVariant::BirthBurst;
                cfg.n_target = cmp.n;
                cfg.constant_m = cmp.m;
                cfg.gamma = cmp.gamma;
                cfg.alpha = cmp.alpha;
                cfg.growth = bbnet::GrowthLaw{cmp.c, cmp.beta};
                cfg.rng_seed = cmp.seed;
                auto graph = bbnet::grow(cfg);
                auto final_t = graph.last_time();
                auto hist = bbnet::degree_histogram(graph.snapshot_at(final_t));
                auto slope = bbnet::slope_and_curvature(hist);

                std::vector<bbnet::Timestamp> times;
                for (bbnet::Timestamp t = 0; t <= final_t; t += std::max<bbnet::Timestamp>(1, final_t / 100)) {
                    times.push_back(t);
                }
                if (times.back() != final_t) times.push_back(final_t);
                auto hubs = bbnet::top_hub_trajectories(graph, times, 1);
                bbnet::BurstParams params;
                auto plateau = bbnet::plateau_stats(hubs[0].points, params.plateau_window, params.tau);

                std::vector<double> etas;
                for (const auto& rec : graph.nodes()) etas.push_back(rec.fitness);
                double gamma_hat = bbnet::fit_gamma(etas);
                double lo = etas[0], hi = etas[0];
                for (double v : etas) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                auto label = bbnet::classify_phase(
                    bbnet::PhaseEvidence{gamma_hat, hi - lo, plateau.passed, plateau.mean_phi});
                out.out() << model << "," << fmt(slope.slope) << "," << fmt(slope.curvature) << ","
                          << fmt(plateau.mean_phi) << "," << (plateau.passed ? 1 : 0) << ","
                          << bbnet::to_string(label) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
