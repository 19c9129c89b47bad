// netsr - command line front end: grow networks from generator expressions,
// score them against targets, and run the evolutionary search.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "netsr/census.hpp"
#include "netsr/classify.hpp"
#include "netsr/config.hpp"
#include "netsr/edgelist.hpp"
#include "netsr/evolve.hpp"
#include "netsr/experiment.hpp"
#include "netsr/parse.hpp"
#include "netsr/simplify.hpp"

namespace {

using namespace netsr;

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) return seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<double> parse_ratio_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw InputError("bad snapshot ratio: " + item);
        }
    }
    return out;
}

void print_network_summary(const Network& net, std::ostream& out) {
    std::int64_t max_degree = 0;
    for (NodeId v = 0; v < net.node_count(); ++v)
        max_degree = std::max(max_degree, net.degree(v));
    out << "nodes: " << net.node_count() << "\n"
        << "edges: " << net.edge_count() << "\n"
        << "directed: " << (net.directed() ? 1 : 0) << "\n"
        << "max_degree: " << max_degree << "\n";
    if (net.node_count() >= 3) {
        TriadCensus census = triad_census(net);
        out << "census:";
        for (std::size_t i = 0; i < census.counts.size(); ++i) {
            const char* name = net.directed() ? kDirectedTriadNames[i] : kUndirectedTriadNames[i];
            out << ' ' << name << '=' << census.counts[i];
        }
        out << "\n";
    }
}

struct CommonOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_given = false;

    ConfigFile config() const {
        return config_path.empty() ? ConfigFile{} : ConfigFile::load(config_path);
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "flat key=value configuration file");
    cmd->add_option("--seed", opts.seed, "rng seed (drawn from entropy when omitted)")
        ->each([&opts](const std::string&) { opts.seed_given = true; });
}

int cmd_gen(const std::string& expr, NodeId nodes, std::int64_t edges, bool directed,
            const std::string& snapshots, const std::string& out_path,
            const std::string& distance_mode, const CommonOpts& common) {
    ConfigFile cfg_file = common.config();
    GeneratorTree gen = parse_generator(expr);
    GenerationConfig cfg = cfg_file.generation();
    cfg.nodes = nodes;
    cfg.edges = edges;
    cfg.directed = directed;
    cfg.seed = resolve_seed(common.seed_given, common.seed);
    if (distance_mode == "exact") cfg.distance_mode = DistanceMode::Exact;
    if (!snapshots.empty()) cfg.snapshot_ratios = parse_ratio_list(snapshots);

    GenerationResult result = generate(gen, cfg);
    write_edge_list_file(result.network, out_path);
    for (const auto& [ratio, net] : result.snapshots)
        if (ratio != 1.0) write_edge_list_file(net, snapshot_path(out_path, ratio));

    std::cout << "# seed=" << cfg.seed << "\n";
    print_network_summary(result.network, std::cout);
    return 0;
}

int cmd_census(const std::string& path) {
    Network net = read_edge_list_file(path);
    TriadCensus census = triad_census(net);
    for (std::size_t i = 0; i < census.counts.size(); ++i) {
        const char* name = net.directed() ? kDirectedTriadNames[i] : kUndirectedTriadNames[i];
        std::cout << name << " " << census.counts[i] << "\n";
    }
    return 0;
}

NullBaseline load_or_build_baseline(const Network& target, const MetricProfile& target_profile,
                                    const std::string& cache_path, std::uint64_t seed,
                                    const MetricsConfig& metrics, int samples) {
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        std::ifstream in(cache_path);
        nlohmann::json j;
        in >> j;
        NullBaseline cached = baseline_from_json(j);
        if (cached.directed == target.directed() && cached.nodes == target.node_count() &&
            cached.edges == target.edge_count())
            return cached;
    }
    NullBaseline base = null_baseline(target_profile, seed, metrics, samples);
    if (!cache_path.empty()) {
        std::ofstream out(cache_path);
        out << to_json(base).dump(2) << "\n";
    }
    return base;
}

int cmd_fit(const std::string& target_path, const std::string& candidate_path,
            const std::string& generator, const std::string& baseline_cache,
            const std::string& out_path, const CommonOpts& common) {
    ConfigFile cfg_file = common.config();
    MetricsConfig metrics = cfg_file.metrics();
    std::uint64_t seed = resolve_seed(common.seed_given, common.seed);

    Network target = read_edge_list_file(target_path);
    MetricProfile target_profile = profile(target, metrics);

    Network candidate = [&] {
        if (!candidate_path.empty()) return read_edge_list_file(candidate_path);
        if (generator.empty()) throw InputError("provide a candidate file or --generator");
        GeneratorTree gen = parse_generator(generator);
        GenerationConfig gcfg = cfg_file.generation();
        gcfg.nodes = target.node_count();
        gcfg.edges = target.edge_count();
        gcfg.directed = target.directed();
        gcfg.seed = seed ^ 0x5eedf00dULL;
        return generate(gen, gcfg).network;
    }();

    NullBaseline base = load_or_build_baseline(target, target_profile, baseline_cache, seed,
                                               metrics, cfg_file.null_samples);
    FitnessReport report = fitness(profile(candidate, metrics), target_profile, base, metrics.bins);
    nlohmann::json j = to_json(report);
    j["seed"] = seed;
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return 0;
}

int cmd_baseline(const std::string& target_path, const std::string& out_path,
                 const CommonOpts& common) {
    ConfigFile cfg_file = common.config();
    MetricsConfig metrics = cfg_file.metrics();
    std::uint64_t seed = resolve_seed(common.seed_given, common.seed);
    Network target = read_edge_list_file(target_path);
    NullBaseline base = null_baseline(target, seed, metrics, cfg_file.null_samples);
    std::string text = to_json(base).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return 0;
}

int cmd_evolve(const std::string& targets_csv, const std::string& initial_path,
               const std::string& out_prefix, const std::string& log_path,
               bool no_recombination, int stagnation, int max_steps, const CommonOpts& common) {
    ConfigFile cfg_file = common.config();
    SearchConfig cfg = cfg_file.search();
    cfg.seed = resolve_seed(common.seed_given, common.seed);
    if (no_recombination) cfg.recombination = false;
    if (stagnation > 0) cfg.stagnation_window = stagnation;
    if (max_steps > 0) cfg.max_steps = max_steps;

    std::vector<Network> targets;
    {
        std::istringstream in(targets_csv);
        std::string item;
        while (std::getline(in, item, ',')) targets.push_back(read_edge_list_file(item));
    }
    if (targets.empty()) throw InputError("no target files given");

    std::ofstream log_file;
    std::ostream* log_stream = &std::cout;
    if (!log_path.empty()) {
        log_file.open(log_path);
        if (!log_file) throw InputError("cannot write log file: " + log_path);
        log_stream = &log_file;
    }
    *log_stream << "# seed=" << cfg.seed << "\n";
    cfg.log_stream = log_stream;

    RunLog log;
    if (!initial_path.empty()) {
        Network initial = read_edge_list_file(initial_path);
        log = evolve_from_initial(initial, targets.back(), cfg);
    } else {
        log = evolve(targets, cfg);
    }

    std::string best_text = format_generator(log.best);
    std::string simplified_text = format_generator(log.best_simplified);
    if (!out_prefix.empty()) {
        std::ofstream raw(out_prefix + ".best.gen");
        raw << best_text << "\n";
        std::ofstream simp(out_prefix + ".best.simplified.gen");
        simp << simplified_text << "\n";
    }
    std::cerr << "steps: " << log.total_steps << "\n"
              << "best_step: " << log.best_step << "\n"
              << "best: " << best_text << "\n"
              << "simplified: " << simplified_text << "\n"
              << "infix: " << format_infix(log.best_simplified) << "\n";
    std::cerr << "fitness:";
    for (double f : log.best_fitness) std::cerr << ' ' << f;
    std::cerr << "\n";
    return 0;
}

int cmd_experiment(const std::string& spec_path, const std::string& out_prefix, int jobs,
                   const CommonOpts&) {
    std::ifstream in(spec_path);
    if (!in) throw InputError("cannot open experiment spec: " + spec_path);
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("experiment spec is not valid JSON: ") + e.what());
    }
    ExperimentResult result = run_experiment(spec, jobs);
    if (!out_prefix.empty()) {
        std::ofstream csv(out_prefix + ".results.csv");
        csv << result.csv;
        std::ofstream summary(out_prefix + ".summary.json");
        summary << result.summary.dump(2) << "\n";
    }
    std::cout << result.summary.dump(2) << "\n";
    return 0;
}

int cmd_distcheck(const std::string& path, int steps, int deciles, const CommonOpts& common) {
    Network recorded = read_edge_list_file(path);
    std::uint64_t seed = resolve_seed(common.seed_given, common.seed);
    Rng rng(seed);
    Network replay(recorded.node_count(), recorded.directed(),
                   std::max<std::int64_t>(recorded.edge_count(), 1));
    WalkerOracle oracle(recorded.node_count());

    std::cout << "# seed=" << seed << "\n";
    std::cout << "xi,correct_fraction\n";
    std::int64_t stride = std::max<std::int64_t>(1, recorded.edge_count() / deciles);
    for (const auto& [u, v] : recorded.edges()) {
        replay.add_edge(u, v);
        oracle.advance(replay, steps, rng);
        if (replay.edge_count() % stride == 0 || replay.edge_count() == recorded.edge_count()) {
            const NodeId n = replay.node_count();
            std::int64_t correct = 0, total = 0;
            for (NodeId a = 0; a < n; ++a) {
                auto row = bfs_distances(replay, a,
                                         replay.directed() ? DistanceKind::Directed
                                                           : DistanceKind::Undirected);
                for (NodeId b = 0; b < n; ++b) {
                    if (a == b) continue;
                    ++total;
                    if (row[static_cast<std::size_t>(b)] >= 1 &&
                        oracle.estimate(a, b) == row[static_cast<std::size_t>(b)])
                        ++correct;
                }
            }
            std::cout << format_double(replay.edge_ratio()) << ','
                      << format_double(static_cast<double>(correct) / static_cast<double>(total))
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolves and scores interpretable network generator programs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "grow a network from a generator expression");
    std::string gen_expr, gen_snapshots, gen_out = "network.edges", gen_distance = "heuristic";
    NodeId gen_nodes = 0;
    std::int64_t gen_edges = 0;
    bool gen_directed = false;
    CommonOpts gen_common;
    gen->add_option("generator", gen_expr, "generator expression in prefix syntax")->required();
    gen->add_option("--nodes", gen_nodes, "node count")->required();
    gen->add_option("--edges", gen_edges, "target edge count")->required();
    gen->add_flag("--directed", gen_directed, "grow a directed network");
    gen->add_option("--snapshots", gen_snapshots, "comma-separated edge ratios, last must be 1.0");
    gen->add_option("--out", gen_out, "output edge list path");
    gen->add_option("--distance", gen_distance, "distance oracle: heuristic|exact")
        ->check(CLI::IsMember({"heuristic", "exact"}));
    add_common(gen, gen_common);

    // census
    auto* census = app.add_subcommand("census", "print the triad census of an edge list");
    std::string census_path;
    census->add_option("file", census_path, "edge list file")->required();

    // fit
    auto* fit = app.add_subcommand("fit", "score a candidate network against a target");
    std::string fit_target, fit_candidate, fit_generator, fit_cache, fit_out;
    CommonOpts fit_common;
    fit->add_option("target", fit_target, "target edge list")->required();
    fit->add_option("candidate", fit_candidate, "candidate edge list");
    fit->add_option("--generator", fit_generator, "grow the candidate from this expression");
    fit->add_option("--baseline-cache", fit_cache, "baseline cache JSON path (reused when valid)");
    fit->add_option("--out", fit_out, "write the report JSON here instead of stdout");
    add_common(fit, fit_common);

    // baseline
    auto* baseline = app.add_subcommand("baseline", "compute the random-network baseline");
    std::string base_target, base_out;
    CommonOpts base_common;
    baseline->add_option("target", base_target, "target edge list")->required();
    baseline->add_option("--out", base_out, "write the baseline JSON here instead of stdout");
    add_common(baseline, base_common);

    // evolve
    auto* ev = app.add_subcommand("evolve", "search for a generator reproducing the target(s)");
    std::string ev_targets, ev_initial, ev_prefix, ev_log;
    bool ev_no_recomb = false;
    int ev_stagnation = 0, ev_max_steps = 0;
    CommonOpts ev_common;
    ev->add_option("--targets", ev_targets, "comma-separated target snapshots, smallest first")
        ->required();
    ev->add_option("--initial", ev_initial, "search only for the edges beyond this network");
    ev->add_option("--out-prefix", ev_prefix, "write <prefix>.best.gen and .best.simplified.gen");
    ev->add_option("--log", ev_log, "write the per-step CSV here instead of stdout");
    ev->add_flag("--no-recombination", ev_no_recomb, "mutate only (two-solution pool)");
    ev->add_option("--stagnation", ev_stagnation, "override the stagnation window");
    ev->add_option("--max-steps", ev_max_steps, "hard step cap (0 = none)");
    add_common(ev, ev_common);

    // experiment
    auto* ex = app.add_subcommand("experiment", "run a batch experiment from a JSON spec");
    std::string ex_spec, ex_prefix;
    int ex_jobs = static_cast<int>(std::thread::hardware_concurrency());
    CommonOpts ex_common;
    ex->add_option("spec", ex_spec, "experiment spec JSON")->required();
    ex->add_option("--out-prefix", ex_prefix, "write <prefix>.results.csv and .summary.json");
    ex->add_option("--jobs", ex_jobs, "worker threads");
    add_common(ex, ex_common);

    // distcheck
    auto* dc = app.add_subcommand("distcheck", "replay an edge list through the walker oracle");
    std::string dc_path;
    int dc_steps = 5, dc_deciles = 10;
    CommonOpts dc_common;
    dc->add_option("file", dc_path, "edge list file (insertion order is the growth order)")
        ->required();
    dc->add_option("--steps", dc_steps, "walker steps per edge");
    dc->add_option("--deciles", dc_deciles, "progress points to report");
    add_common(dc, dc_common);

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return cmd_gen(gen_expr, gen_nodes, gen_edges, gen_directed, gen_snapshots, gen_out,
                           gen_distance, gen_common);
        if (census->parsed()) return cmd_census(census_path);
        if (fit->parsed())
            return cmd_fit(fit_target, fit_candidate, fit_generator, fit_cache, fit_out, fit_common);
        if (baseline->parsed()) return cmd_baseline(base_target, base_out, base_common);
        if (ev->parsed())
            return cmd_evolve(ev_targets, ev_initial, ev_prefix, ev_log, ev_no_recomb,
                              ev_stagnation, ev_max_steps, ev_common);
        if (ex->parsed()) return cmd_experiment(ex_spec, ex_prefix, std::max(1, ex_jobs), ex_common);
        if (dc->parsed()) return cmd_distcheck(dc_path, dc_steps, dc_deciles, dc_common);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const netsr::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
