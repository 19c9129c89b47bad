#include "netsr/experiment.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "netsr/classify.hpp"
#include "netsr/config.hpp"
#include "netsr/evolve.hpp"
#include "netsr/parse.hpp"

namespace netsr {

namespace {

using nlohmann::json;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0) {
    auto split = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    return split(split(split(split(seed) ^ a) ^ b) ^ c);
}

void check_keys(const json& spec, std::initializer_list<const char*> allowed) {
    std::string offenders;
    for (const auto& [key, value] : spec.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (key == k) { known = true; break; }
        if (!known) offenders += offenders.empty() ? key : ", " + key;
    }
    if (!offenders.empty())
        throw InputError("experiment spec has unknown keys: " + offenders);
}

template <typename T>
T require(const json& spec, const char* key) {
    if (!spec.contains(key)) throw InputError(std::string("experiment spec is missing '") + key + "'");
    try {
        return spec.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("experiment spec key '") + key + "' has the wrong type");
    }
}

template <typename T>
T optional_key(const json& spec, const char* key, T fallback) {
    if (!spec.contains(key)) return fallback;
    try {
        return spec.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("experiment spec key '") + key + "' has the wrong type");
    }
}

void parallel_for(int jobs, std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

std::vector<double> snapshot_list(const json& spec) {
    auto ratios = optional_key<std::vector<double>>(spec, "snapshots", {1.0});
    if (ratios.empty()) ratios = {1.0};
    return ratios;
}

GenerationConfig base_generation(const json& spec, const ConfigFile& defaults) {
    GenerationConfig g = defaults.generation();
    g.nodes = require<NodeId>(spec, "nodes");
    g.edges = require<std::int64_t>(spec, "edges");
    g.directed = optional_key<bool>(spec, "directed", false);
    g.sampling_ratio = optional_key<double>(spec, "sampling_ratio", g.sampling_ratio);
    g.rw_steps_per_edge = optional_key<int>(spec, "rw_steps", g.rw_steps_per_edge);
    if (optional_key<std::string>(spec, "distance_mode", "heuristic") == "exact")
        g.distance_mode = DistanceMode::Exact;
    return g;
}

// ---------------------------------------------------------------- compare

ExperimentResult run_compare(const json& spec, int jobs) {
    check_keys(spec, {"kind", "nodes", "edges", "directed", "target_generator", "targets",
                      "comparisons", "runs_per_comparison", "snapshots", "seed", "sampling_ratio",
                      "rw_steps", "distance_mode", "null_samples", "bins"});
    ConfigFile defaults;
    GenerationConfig gen_cfg = base_generation(spec, defaults);
    MetricsConfig metrics = defaults.metrics();
    metrics.bins = optional_key<int>(spec, "bins", metrics.bins);
    int null_samples = optional_key<int>(spec, "null_samples", defaults.null_samples);
    std::uint64_t seed = optional_key<std::uint64_t>(spec, "seed", 1);
    int n_targets = require<int>(spec, "targets");
    int runs = require<int>(spec, "runs_per_comparison");
    gen_cfg.snapshot_ratios = snapshot_list(spec);
    GeneratorTree target_gen = parse_generator(require<std::string>(spec, "target_generator"));

    struct Comparison {
        std::string name;
        GeneratorTree tree;
    };
    std::vector<Comparison> comparisons;
    for (const auto& c : require<json>(spec, "comparisons")) {
        check_keys(c, {"name", "generator"});
        comparisons.push_back({require<std::string>(c, "name"),
                               parse_generator(require<std::string>(c, "generator"))});
    }

    struct TargetData {
        std::vector<MetricProfile> profiles;
        std::vector<NullBaseline> baselines;
    };
    std::vector<TargetData> targets(static_cast<std::size_t>(n_targets));
    parallel_for(jobs, targets.size(), [&](std::size_t t) {
        GenerationConfig cfg = gen_cfg;
        cfg.seed = mix_seed(seed, 1, t);
        GenerationResult r = generate(target_gen, cfg);
        TargetData& data = targets[t];
        for (std::size_t s = 0; s < r.snapshots.size(); ++s) {
            data.profiles.push_back(profile(r.snapshots[s].second, metrics));
            data.baselines.push_back(
                null_baseline(data.profiles.back(), mix_seed(seed, 2, t, s), metrics, null_samples));
        }
    });

    struct Row {
        std::size_t comparison, target, run, snapshot;
        double fitness, mean_dissim;
    };
    std::size_t total = comparisons.size() * static_cast<std::size_t>(n_targets) *
                        static_cast<std::size_t>(runs);
    std::vector<std::vector<Row>> rows(total);
    parallel_for(jobs, total, [&](std::size_t idx) {
        std::size_t c = idx / (static_cast<std::size_t>(n_targets) * static_cast<std::size_t>(runs));
        std::size_t rem = idx % (static_cast<std::size_t>(n_targets) * static_cast<std::size_t>(runs));
        std::size_t t = rem / static_cast<std::size_t>(runs);
        std::size_t r = rem % static_cast<std::size_t>(runs);
        GenerationConfig cfg = gen_cfg;
        cfg.seed = mix_seed(seed, 3, idx);
        GenerationResult result = generate(comparisons[c].tree, cfg);
        for (std::size_t s = 0; s < result.snapshots.size(); ++s) {
            FitnessReport rep = fitness(profile(result.snapshots[s].second, metrics),
                                        targets[t].profiles[s], targets[t].baselines[s], metrics.bins);
            rows[idx].push_back({c, t, r, s, rep.fitness, rep.mean_dissimilarity});
        }
    });

    std::ostringstream csv;
    csv << "comparison,target,run,xi,fitness,mean_dissimilarity\n";
    // per (comparison, snapshot) aggregates
    std::vector<std::vector<double>> fit_acc(comparisons.size() * gen_cfg.snapshot_ratios.size());
    std::vector<std::vector<double>> md_acc(fit_acc.size());
    for (const auto& group : rows) {
        for (const Row& row : group) {
            csv << comparisons[row.comparison].name << ',' << row.target << ',' << row.run << ','
                << format_double(gen_cfg.snapshot_ratios[row.snapshot]) << ','
                << format_double(row.fitness) << ',' << format_double(row.mean_dissim) << '\n';
            std::size_t cell = row.comparison * gen_cfg.snapshot_ratios.size() + row.snapshot;
            fit_acc[cell].push_back(row.fitness);
            md_acc[cell].push_back(row.mean_dissim);
        }
    }
    json summary{{"kind", "compare"}, {"seed", seed}, {"cells", json::array()}};
    for (std::size_t c = 0; c < comparisons.size(); ++c)
        for (std::size_t s = 0; s < gen_cfg.snapshot_ratios.size(); ++s) {
            std::size_t cell = c * gen_cfg.snapshot_ratios.size() + s;
            summary["cells"].push_back({{"comparison", comparisons[c].name},
                                        {"xi", gen_cfg.snapshot_ratios[s]},
                                        {"runs", fit_acc[cell].size()},
                                        {"mean_fitness", mean(fit_acc[cell])},
                                        {"mean_dissimilarity", mean(md_acc[cell])}});
        }
    return {std::move(summary), csv.str()};
}

// ----------------------------------------------------------------- evolve

ExperimentResult run_evolve(const json& spec, int jobs) {
    check_keys(spec, {"kind", "nodes", "edges", "directed", "target_generator", "targets",
                      "runs_per_target", "snapshots", "seed", "recombination",
                      "recombination_probability", "stagnation_window", "max_steps",
                      "sampling_ratio", "rw_steps", "distance_mode", "null_samples", "bins",
                      "initial"});
    ConfigFile defaults;
    GenerationConfig gen_cfg = base_generation(spec, defaults);
    SearchConfig search = defaults.search();
    search.generation = gen_cfg;
    search.metrics.bins = optional_key<int>(spec, "bins", search.metrics.bins);
    search.null_samples = optional_key<int>(spec, "null_samples", search.null_samples);
    search.recombination = optional_key<bool>(spec, "recombination", search.recombination);
    search.recombination_probability =
        optional_key<double>(spec, "recombination_probability", search.recombination_probability);
    search.stagnation_window = optional_key<int>(spec, "stagnation_window", search.stagnation_window);
    search.max_steps = optional_key<int>(spec, "max_steps", search.max_steps);

    std::uint64_t seed = optional_key<std::uint64_t>(spec, "seed", 1);
    int n_targets = require<int>(spec, "targets");
    int runs = require<int>(spec, "runs_per_target");
    std::vector<double> ratios = snapshot_list(spec);
    gen_cfg.snapshot_ratios = ratios;
    GeneratorTree target_gen = parse_generator(require<std::string>(spec, "target_generator"));

    bool from_initial = spec.contains("initial");
    GeneratorTree initial_gen;
    std::int64_t initial_edges = 0;
    if (from_initial) {
        const json& init = spec.at("initial");
        check_keys(init, {"generator", "edges"});
        initial_gen = parse_generator(require<std::string>(init, "generator"));
        initial_edges = require<std::int64_t>(init, "edges");
        if (initial_edges < 1 || initial_edges >= gen_cfg.edges)
            throw InputError("initial edge count must lie in [1, edges)");
    }

    struct TargetData {
        std::vector<Network> snapshots;
        std::optional<Network> initial;
    };
    std::vector<TargetData> targets;
    targets.reserve(static_cast<std::size_t>(n_targets));
    for (int t = 0; t < n_targets; ++t) {
        GenerationConfig cfg = gen_cfg;
        cfg.seed = mix_seed(seed, 11, static_cast<std::uint64_t>(t));
        TargetData data;
        if (from_initial) {
            GenerationConfig icfg = cfg;
            icfg.edges = initial_edges;
            icfg.snapshot_ratios = {1.0};
            data.initial = generate(initial_gen, icfg).network;
            cfg.seed = mix_seed(seed, 12, static_cast<std::uint64_t>(t));
            cfg.snapshot_ratios = {1.0};
            data.snapshots.push_back(generate_from(*data.initial, target_gen, cfg).network);
        } else {
            GenerationResult r = generate(target_gen, cfg);
            for (auto& [ratio, net] : r.snapshots) data.snapshots.push_back(std::move(net));
        }
        targets.push_back(std::move(data));
    }

    struct Row {
        std::size_t target = 0, run = 0;
        std::int64_t steps = 0, best_step = 0;
        std::vector<double> fitness;
        double mean_dissim = 0.0;
        std::size_t tree_size = 0;
        bool variable_free = false, uniform = false, monotone_degree = false, dist_family = false;
        std::vector<double> deltas;
        std::string family;
        std::string generator;
    };
    std::size_t total = static_cast<std::size_t>(n_targets) * static_cast<std::size_t>(runs);
    std::vector<Row> rows(total);
    parallel_for(jobs, total, [&](std::size_t idx) {
        std::size_t t = idx / static_cast<std::size_t>(runs);
        std::size_t r = idx % static_cast<std::size_t>(runs);
        SearchConfig cfg = search;
        cfg.seed = mix_seed(seed, 13, idx);
        RunLog log = targets[t].initial
                         ? evolve_from_initial(*targets[t].initial, targets[t].snapshots.back(), cfg)
                         : evolve(targets[t].snapshots, cfg);
        Row& row = rows[idx];
        row.target = t;
        row.run = r;
        row.steps = log.total_steps;
        row.best_step = log.best_step;
        row.fitness = log.best_fitness;
        row.mean_dissim = log.final_pool.best.mean_dissimilarity();
        row.tree_size = log.best_simplified.size();
        row.variable_free = !contains_variable(log.best_simplified);
        row.uniform = uniform_equivalent(log.best_simplified);
        row.monotone_degree = degree_monotone(log.best_simplified);
        row.dist_family = distance_family(log.best_simplified);
        row.deltas = delta_thresholds(log.best_simplified);
        row.family = family_name(classify_family(log.best_simplified));
        row.generator = format_generator(log.best_simplified);
    });

    std::ostringstream csv;
    csv << "target,run,steps,best_step";
    for (std::size_t s = 1; s <= ratios.size(); ++s) csv << ",fitness_s" << s;
    csv << ",mean_dissimilarity,tree_size,variable_free,uniform_equivalent,degree_monotone,"
           "distance_family,delta_thresholds,family,generator\n";
    std::vector<double> best_steps, fitnesses;
    for (const Row& row : rows) {
        csv << row.target << ',' << row.run << ',' << row.steps << ',' << row.best_step;
        for (double f : row.fitness) csv << ',' << format_double(f);
        csv << ',' << format_double(row.mean_dissim) << ',' << row.tree_size << ','
            << (row.variable_free ? 1 : 0) << ',' << (row.uniform ? 1 : 0) << ','
            << (row.monotone_degree ? 1 : 0) << ',' << (row.dist_family ? 1 : 0) << ',';
        for (std::size_t i = 0; i < row.deltas.size(); ++i)
            csv << (i ? ";" : "") << format_double(row.deltas[i]);
        csv << ',' << row.family << ',' << row.generator << '\n';
        best_steps.push_back(static_cast<double>(row.best_step));
        if (!row.fitness.empty()) fitnesses.push_back(*std::max_element(row.fitness.begin(), row.fitness.end()));
    }
    json summary{{"kind", "evolve"},
                 {"seed", seed},
                 {"runs", rows.size()},
                 {"mean_best_step", mean(best_steps)},
                 {"mean_best_fitness", mean(fitnesses)}};
    std::size_t var_free = 0, uniform_runs = 0, deg_mono = 0, dist_fam = 0;
    for (const Row& row : rows) {
        var_free += row.variable_free;
        uniform_runs += row.uniform;
        deg_mono += row.monotone_degree;
        dist_fam += row.dist_family;
    }
    summary["variable_free_runs"] = var_free;
    summary["uniform_equivalent_runs"] = uniform_runs;
    summary["degree_monotone_runs"] = deg_mono;
    summary["distance_family_runs"] = dist_fam;
    return {std::move(summary), csv.str()};
}

// ----------------------------------------------------------- rw_benchmark

double correct_fraction(const Network& net, const WalkerOracle& oracle) {
    const NodeId n = net.node_count();
    std::int64_t correct = 0, total = 0;
    for (NodeId u = 0; u < n; ++u) {
        auto row = bfs_distances(net, u, net.directed() ? DistanceKind::Directed
                                                        : DistanceKind::Undirected);
        for (NodeId v = 0; v < n; ++v) {
            if (u == v) continue;
            ++total;
            std::int32_t exact = row[static_cast<std::size_t>(v)];
            if (exact >= 1 && oracle.estimate(u, v) == exact) ++correct;
        }
    }
    return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
}

ExperimentResult run_rw_benchmark(const json& spec, int jobs) {
    check_keys(spec, {"kind", "nodes", "edges", "directed", "generator", "strategies", "runs",
                      "deciles", "dissimilarity_runs", "seed", "sampling_ratio", "null_samples",
                      "bins"});
    ConfigFile defaults;
    GenerationConfig gen_cfg = base_generation(spec, defaults);
    MetricsConfig metrics = defaults.metrics();
    metrics.bins = optional_key<int>(spec, "bins", metrics.bins);
    int null_samples = optional_key<int>(spec, "null_samples", defaults.null_samples);
    std::uint64_t seed = optional_key<std::uint64_t>(spec, "seed", 1);
    auto strategies = optional_key<std::vector<int>>(spec, "strategies", {1, 5});
    int runs = require<int>(spec, "runs");
    int deciles = optional_key<int>(spec, "deciles", 10);
    int dissim_runs = optional_key<int>(spec, "dissimilarity_runs", 0);
    GeneratorTree gen = parse_generator(require<std::string>(spec, "generator"));

    struct Series {
        int strategy = 0;
        std::size_t run = 0;
        std::vector<std::pair<double, double>> points;  // (xi, fraction)
    };
    std::size_t total = strategies.size() * static_cast<std::size_t>(runs);
    std::vector<Series> series(total);
    parallel_for(jobs, total, [&](std::size_t idx) {
        std::size_t si = idx / static_cast<std::size_t>(runs);
        std::size_t r = idx % static_cast<std::size_t>(runs);
        GenerationConfig cfg = gen_cfg;
        cfg.distance_mode = DistanceMode::Heuristic;
        cfg.rw_steps_per_edge = strategies[si];
        cfg.seed = mix_seed(seed, 21, idx);
        Series& s = series[idx];
        s.strategy = strategies[si];
        s.run = r;
        std::int64_t stride = std::max<std::int64_t>(1, cfg.edges / deciles);
        cfg.on_edge = [&](const Network& net, const WalkerOracle* oracle) {
            if (!oracle) return;
            if (net.edge_count() % stride == 0 || net.edge_count() == cfg.edges)
                s.points.emplace_back(static_cast<double>(net.edge_count()) /
                                          static_cast<double>(cfg.edges),
                                      correct_fraction(net, *oracle));
        };
        generate(gen, cfg);
    });

    std::vector<double> dissims(static_cast<std::size_t>(dissim_runs));
    parallel_for(jobs, dissims.size(), [&](std::size_t p) {
        GenerationConfig exact_cfg = gen_cfg;
        exact_cfg.distance_mode = DistanceMode::Exact;
        exact_cfg.seed = mix_seed(seed, 22, p);
        Network target = generate(gen, exact_cfg).network;
        MetricProfile target_profile = profile(target, metrics);
        NullBaseline base = null_baseline(target_profile, mix_seed(seed, 23, p), metrics, null_samples);
        GenerationConfig heur_cfg = gen_cfg;
        heur_cfg.distance_mode = DistanceMode::Heuristic;
        heur_cfg.seed = mix_seed(seed, 24, p);
        Network cand = generate(gen, heur_cfg).network;
        dissims[p] = fitness(profile(cand, metrics), target_profile, base, metrics.bins)
                         .mean_dissimilarity;
    });

    std::ostringstream csv;
    csv << "series,strategy,run,xi,value\n";
    for (const Series& s : series)
        for (auto [xi, frac] : s.points)
            csv << "correct_fraction," << s.strategy << ',' << s.run << ',' << format_double(xi)
                << ',' << format_double(frac) << '\n';
    for (std::size_t p = 0; p < dissims.size(); ++p)
        csv << "exact_vs_heuristic_mean_dissim,0," << p << ",1," << format_double(dissims[p])
            << '\n';

    json summary{{"kind", "rw_benchmark"}, {"seed", seed}, {"strategies", json::array()}};
    for (std::size_t si = 0; si < strategies.size(); ++si) {
        // mean fraction per decile across runs
        std::vector<double> xs;
        std::vector<std::vector<double>> fracs;
        for (const Series& s : series) {
            if (s.strategy != strategies[si]) continue;
            for (std::size_t p = 0; p < s.points.size(); ++p) {
                if (p >= xs.size()) {
                    xs.push_back(s.points[p].first);
                    fracs.emplace_back();
                }
                fracs[p].push_back(s.points[p].second);
            }
        }
        json curve = json::array();
        for (std::size_t p = 0; p < xs.size(); ++p)
            curve.push_back({{"xi", xs[p]}, {"mean_fraction", mean(fracs[p])}});
        summary["strategies"].push_back({{"steps_per_edge", strategies[si]}, {"curve", curve}});
    }
    if (!dissims.empty()) summary["exact_vs_heuristic_mean_dissimilarity"] = mean(dissims);
    return {std::move(summary), csv.str()};
}

}  // namespace

ExperimentResult run_experiment(const json& spec, int jobs) {
    if (!spec.is_object()) throw InputError("experiment spec must be a JSON object");
    std::string kind = require<std::string>(spec, "kind");
    if (kind == "compare") return run_compare(spec, jobs);
    if (kind == "evolve") return run_evolve(spec, jobs);
    if (kind == "rw_benchmark") return run_rw_benchmark(spec, jobs);
    throw InputError("unknown experiment kind '" + kind + "'");
}

}  // namespace netsr
