// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fail. Criteria 1-6 run full searches and take a while; use --only N[,M...]
// to run a subset during development.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netsr/classify.hpp"
#include "netsr/evolve.hpp"
#include "netsr/parse.hpp"
#include "netsr/simplify.hpp"
#include "oracles.hpp"

using namespace netsr;

namespace {

struct Criterion {
    int id;
    bool passed;
    std::string detail;
};

std::vector<Criterion> g_results;
int g_checked = 0;

void report(int id, bool passed, const std::string& detail) {
    g_results.push_back({id, passed, detail});
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
}

double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

SearchConfig default_search(std::uint64_t seed) {
    SearchConfig cfg;  // defaults mirror the shipped configuration
    cfg.seed = seed;
    return cfg;
}

std::vector<Network> snapshot_targets(const GeneratorTree& gen, NodeId nodes, std::int64_t edges,
                                      const std::vector<double>& ratios, std::uint64_t seed) {
    GenerationConfig cfg;
    cfg.nodes = nodes;
    cfg.edges = edges;
    cfg.snapshot_ratios = ratios;
    cfg.seed = seed;
    auto result = generate(gen, cfg);
    std::vector<Network> targets;
    for (auto& [r, net] : result.snapshots) targets.push_back(std::move(net));
    return targets;
}

// 1. uniform-network recovery: the simplified best tree must weight every
// candidate equally (a constant, or one varying only with the shared edge
// ratio), with fitness no worse than the generating process itself reaches.
// The fitness threshold comes from the stated derivation: the 5th
// percentile of the constant generator's own self-fitness distribution
// against this target (self-comparisons of uniform processes center near 1
// by construction of the normalization, so a fixed small bound would be
// unreachable even for the true generator).
void criterion_1() {
    auto gen = parse_generator("1");
    auto targets = snapshot_targets(gen, 200, 1000, {1.0}, 101);

    MetricsConfig metrics;
    MetricProfile target_profile = profile(targets[0], metrics);
    NullBaseline base = null_baseline(target_profile, 102, metrics);
    std::vector<double> self_fits;
    for (int t = 0; t < 100; ++t) {
        GenerationConfig cfg;
        cfg.nodes = 200;
        cfg.edges = 1000;
        cfg.seed = 150 + static_cast<std::uint64_t>(t);
        self_fits.push_back(
            fitness(profile(generate(gen, cfg).network, metrics), target_profile, base).fitness);
    }
    std::sort(self_fits.begin(), self_fits.end());
    const double threshold = self_fits[5];

    int hits = 0;
    std::ostringstream detail;
    for (int run = 0; run < 5; ++run) {
        RunLog log = evolve(targets, default_search(110 + static_cast<std::uint64_t>(run)));
        bool ok = uniform_equivalent(log.best_simplified) && log.best_fitness[0] <= threshold;
        hits += ok;
        detail << (run ? " " : "") << format_double(log.best_fitness[0])
               << (uniform_equivalent(log.best_simplified) ? "" : "v") << (ok ? "+" : "-");
    }
    report(1, hits >= 3, "uniform recovery " + std::to_string(hits) + "/5 runs at derived threshold " +
                             format_double(threshold) + " (fitness/flags: " + detail.str() + ")");
}

// 2. degree-weighted recovery: monotone-in-degree trees at low fitness
void criterion_2() {
    auto gen = parse_generator("k_i");
    auto targets = snapshot_targets(gen, 200, 1431, {1.0}, 201);
    int hits = 0;
    std::ostringstream detail;
    for (int run = 0; run < 5; ++run) {
        RunLog log = evolve(targets, default_search(210 + static_cast<std::uint64_t>(run)));
        bool ok = degree_monotone(log.best_simplified) && log.best_fitness[0] <= 0.3;
        hits += ok;
        detail << (run ? " " : "") << format_double(log.best_fitness[0]) << (ok ? "+" : "-");
    }
    report(2, hits >= 3,
           "degree recovery " + std::to_string(hits) + "/5 runs (" + detail.str() + ")");
}

// 3. two-phase generators carry their own signature
void criterion_3() {
    const NodeId nodes = 300;
    const std::int64_t edges = 3000;
    auto delta_gen = parse_generator("(delta 0.5 k_i (pow k_i k_i))");
    auto shorthand = parse_generator("(> xi 0.5 (pow k_i k_i) k_i)");
    auto pa = parse_generator("k_i");
    const std::vector<double> ratios{0.5, 1.0};
    MetricsConfig metrics;

    struct Cell {
        std::vector<double> fitness_half, fitness_full;
    };
    Cell self, shorthand_cell, pa_cell;

    for (int t = 0; t < 5; ++t) {
        GenerationConfig cfg;
        cfg.nodes = nodes;
        cfg.edges = edges;
        cfg.snapshot_ratios = ratios;
        cfg.seed = 301 + static_cast<std::uint64_t>(t);
        auto target = generate(delta_gen, cfg);
        std::vector<MetricProfile> profiles;
        std::vector<NullBaseline> baselines;
        for (std::size_t s = 0; s < 2; ++s) {
            profiles.push_back(profile(target.snapshots[s].second, metrics));
            baselines.push_back(null_baseline(profiles.back(),
                                              400 + static_cast<std::uint64_t>(t * 2 + static_cast<int>(s)),
                                              metrics));
        }
        auto run_kind = [&](const GeneratorTree& g, Cell& cell, std::uint64_t salt) {
            for (int r = 0; r < 10; ++r) {
                GenerationConfig ccfg = cfg;
                ccfg.seed = salt + static_cast<std::uint64_t>(t * 100 + r);
                auto cand = generate(g, ccfg);
                cell.fitness_half.push_back(
                    fitness(profile(cand.snapshots[0].second, metrics), profiles[0], baselines[0])
                        .fitness);
                cell.fitness_full.push_back(
                    fitness(profile(cand.snapshots[1].second, metrics), profiles[1], baselines[1])
                        .fitness);
            }
        };
        run_kind(delta_gen, self, 5000);
        run_kind(shorthand, shorthand_cell, 6000);
        run_kind(pa, pa_cell, 7000);
    }

    double self_full = mean(self.fitness_full);
    double pa_full = mean(pa_cell.fitness_full);
    double halves[3] = {mean(self.fitness_half), mean(shorthand_cell.fitness_half),
                        mean(pa_cell.fitness_half)};
    double spread = *std::max_element(halves, halves + 3) - *std::min_element(halves, halves + 3);

    bool ok = self_full <= 0.4 && pa_full >= 0.9 && spread <= 0.2;
    std::ostringstream detail;
    detail << "self@1.0=" << format_double(self_full) << " pa@1.0=" << format_double(pa_full)
           << " half-means=" << format_double(halves[0]) << "/" << format_double(halves[1]) << "/"
           << format_double(halves[2]) << " spread=" << format_double(spread);
    report(3, ok, detail.str());
}

// 4. switch-point recovery from two snapshots
void criterion_4() {
    auto gen = parse_generator("(delta 0.5 (pow k_i k_i) k_i)");
    int hits = 0;
    std::ostringstream detail;
    for (int run = 0; run < 5; ++run) {
        auto targets = snapshot_targets(gen, 300, 3000, {0.5, 1.0},
                                        401 + static_cast<std::uint64_t>(run));
        RunLog log = evolve(targets, default_search(420 + static_cast<std::uint64_t>(run)));
        bool threshold_ok = false;
        for (double g : delta_thresholds(log.best_simplified))
            if (g >= 0.40 && g <= 0.60) threshold_ok = true;
        bool fit_ok = log.best_fitness[0] <= 0.2 && log.best_fitness[1] <= 0.2;
        hits += threshold_ok && fit_ok;
        detail << (run ? " " : "") << "[" << format_double(log.best_fitness[0]) << ","
               << format_double(log.best_fitness[1]) << (threshold_ok ? ",g+" : ",g-") << "]";
    }
    report(4, hits >= 2,
           "switch-point recovery " + std::to_string(hits) + "/5 runs " + detail.str());
}

// 5. recombination reaches the best solution sooner on distance recovery
void criterion_5() {
    auto gen = parse_generator("d");
    std::vector<double> steps_with, steps_without;
    int recovered_with = 0, recovered_without = 0;
    for (int run = 0; run < 15; ++run) {
        auto targets = snapshot_targets(gen, 200, 2000, {1.0}, 501 + static_cast<std::uint64_t>(run));
        for (bool recombination : {false, true}) {
            SearchConfig cfg = default_search(520 + static_cast<std::uint64_t>(run * 2 + recombination));
            cfg.recombination = recombination;
            RunLog log = evolve(targets, cfg);
            bool recovered = distance_family(log.best_simplified);
            if (recombination) {
                steps_with.push_back(static_cast<double>(log.best_step));
                recovered_with += recovered;
            } else {
                steps_without.push_back(static_cast<double>(log.best_step));
                recovered_without += recovered;
            }
        }
    }
    bool ok = mean(steps_with) < mean(steps_without) && recovered_with == 15 &&
              recovered_without == 15;
    std::ostringstream detail;
    detail << "mean best step with=" << format_double(mean(steps_with))
           << " without=" << format_double(mean(steps_without)) << ", recovered "
           << recovered_with << "/15 and " << recovered_without << "/15";
    report(5, ok, detail.str());
}

// 6. walker estimates: five steps beat one everywhere and end accurate;
//    heuristic-grown networks stay close to exact-grown ones
void criterion_6() {
    auto gen = parse_generator("d");
    const int runs = 5;
    const int deciles = 10;
    std::vector<std::vector<double>> fractions[2];  // [strategy][decile] -> runs
    int strategies[2] = {1, 5};
    for (int si = 0; si < 2; ++si) {
        fractions[si].assign(deciles, {});
        for (int run = 0; run < runs; ++run) {
            GenerationConfig cfg;
            cfg.nodes = 200;
            cfg.edges = 2000;
            cfg.rw_steps_per_edge = strategies[si];
            cfg.seed = 601 + static_cast<std::uint64_t>(si * 100 + run);
            std::int64_t stride = cfg.edges / deciles;
            cfg.on_edge = [&](const Network& net, const WalkerOracle* oracle) {
                if (!oracle || net.edge_count() % stride != 0) return;
                std::int64_t idx = net.edge_count() / stride - 1;
                std::int64_t correct = 0, total = 0;
                for (NodeId u = 0; u < net.node_count(); ++u) {
                    auto row = bfs_distances(net, u, DistanceKind::Undirected);
                    for (NodeId v = 0; v < net.node_count(); ++v) {
                        if (u == v) continue;
                        ++total;
                        if (row[static_cast<std::size_t>(v)] >= 1 &&
                            oracle->estimate(u, v) == row[static_cast<std::size_t>(v)])
                            ++correct;
                    }
                }
                fractions[si][static_cast<std::size_t>(idx)].push_back(
                    static_cast<double>(correct) / static_cast<double>(total));
            };
            generate(gen, cfg);
        }
    }
    bool pointwise = true;
    for (int d = 0; d < deciles; ++d)
        if (mean(fractions[1][static_cast<std::size_t>(d)]) <
            mean(fractions[0][static_cast<std::size_t>(d)]))
            pointwise = false;
    double final_fraction = mean(fractions[1][deciles - 1]);

    // the growth-mode comparison runs at the denser benchmark size, where
    // the walker estimates are the designed fast path
    MetricsConfig metrics;
    std::vector<double> dissims;
    for (int p = 0; p < 12; ++p) {
        GenerationConfig exact_cfg;
        exact_cfg.nodes = 300;
        exact_cfg.edges = 3000;
        exact_cfg.distance_mode = DistanceMode::Exact;
        exact_cfg.seed = 650 + static_cast<std::uint64_t>(p);
        Network target = generate(gen, exact_cfg).network;
        MetricProfile target_profile = profile(target, metrics);
        NullBaseline base = null_baseline(target_profile, 660 + static_cast<std::uint64_t>(p), metrics);
        GenerationConfig heur_cfg = exact_cfg;
        heur_cfg.distance_mode = DistanceMode::Heuristic;
        heur_cfg.seed = 770 + static_cast<std::uint64_t>(p);
        Network cand = generate(gen, heur_cfg).network;
        dissims.push_back(fitness(profile(cand, metrics), target_profile, base).mean_dissimilarity);
    }
    double mean_dissim = mean(dissims);

    bool ok = pointwise && final_fraction >= 0.85 && mean_dissim >= 0.15 && mean_dissim <= 0.55;
    std::ostringstream detail;
    detail << "five-step curve " << (pointwise ? "dominates" : "falls below")
           << " one-step, final fraction=" << format_double(final_fraction)
           << ", exact-vs-heuristic mean dissimilarity=" << format_double(mean_dissim);
    report(6, ok, detail.str());
}

// 7. oracle equivalences and determinism, all exact and fast
void criterion_7() {
    bool ok = true;
    std::ostringstream detail;

    {  // triad census vs triple enumeration
        oracles::TriadOracle oracle;
        Rng rng(711);
        bool census_ok = true;
        for (int trial = 0; trial < 50; ++trial) {
            NodeId n = static_cast<NodeId>(5 + rand_index(rng, 26));
            double density = 0.1 + 0.4 * rand_unit(rng);
            Network net = oracles::random_digraph(n, density, rng);
            if (triad_census(net).counts != oracle.census(net)) census_ok = false;
        }
        ok &= census_ok;
        detail << "census=" << (census_ok ? "exact" : "MISMATCH");
    }
    {  // emd vs transport
        Rng rng(712);
        bool emd_ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> a(10 + rand_index(rng, 50)), b(10 + rand_index(rng, 50));
            for (double& x : a) x = rand_unit(rng) * 30;
            for (double& x : b) x = rand_unit(rng) * 30 - 5;
            double lo = std::min(*std::min_element(a.begin(), a.end()),
                                 *std::min_element(b.begin(), b.end()));
            double hi = std::max(*std::max_element(a.begin(), a.end()),
                                 *std::max_element(b.begin(), b.end()));
            double want = oracles::transport_emd(oracles::histogram(a, lo, hi, 100),
                                                 oracles::histogram(b, lo, hi, 100));
            if (std::fabs(emd(a, b, 100) - want) > 1e-9) emd_ok = false;
        }
        ok &= emd_ok;
        detail << " emd=" << (emd_ok ? "1e-9" : "MISMATCH");
    }
    {  // pagerank vs dense iteration
        Rng rng(713);
        bool pr_ok = true;
        for (int trial = 0; trial < 10; ++trial) {
            Network net = oracles::random_digraph(20, 0.2, rng);
            PageRankParams params;
            params.tolerance = 1e-12;
            params.max_iterations = 2000;
            auto got = pagerank(net, params).scores;
            auto want = oracles::dense_pagerank(net, 0.85, false);
            for (std::size_t i = 0; i < want.size(); ++i)
                if (std::fabs(got[i] - want[i]) > 1e-6) pr_ok = false;
        }
        ok &= pr_ok;
        detail << " pagerank=" << (pr_ok ? "1e-6" : "MISMATCH");
    }
    {  // simplify preserves evaluation
        Rng rng(714);
        InitParams params;
        bool simp_ok = true;
        std::vector<EdgeContext> ctxs;
        for (int c = 0; c < 1000; ++c) {
            EdgeContext ctx;
            ctx.i = static_cast<NodeId>(rand_index(rng, 150));
            ctx.j = static_cast<NodeId>(rand_index(rng, 149));
            if (ctx.j >= ctx.i) ++ctx.j;
            ctx.k_i = static_cast<double>(rand_index(rng, 25));
            ctx.k_j = static_cast<double>(rand_index(rng, 25));
            bool directed = c % 2 == 0;
            ctx.kin_i = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_i;
            ctx.kin_j = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_j;
            ctx.kout_i = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_i;
            ctx.kout_j = directed ? static_cast<double>(rand_index(rng, 12)) : ctx.k_j;
            ctx.d = static_cast<double>(1 + rand_index(rng, 10));
            ctx.dd = directed ? static_cast<double>(1 + rand_index(rng, 10)) : ctx.d;
            ctx.dr = directed ? static_cast<double>(1 + rand_index(rng, 10)) : ctx.d;
            ctx.xi = rand_unit(rng);
            ctxs.push_back(ctx);
        }
        for (int t = 0; t < 1000 && simp_ok; ++t) {
            params.directed = t % 2 == 0;
            GeneratorTree tree = random_tree(params, rng);
            GeneratorTree reduced = simplify(tree);
            for (const EdgeContext& ctx : ctxs)
                if (evaluate(tree, ctx) != evaluate(reduced, ctx)) {
                    simp_ok = false;
                    break;
                }
        }
        ok &= simp_ok;
        detail << " simplify=" << (simp_ok ? "exact" : "MISMATCH");
    }
    {  // selection probabilities sum to one
        Rng rng(715);
        bool sum_ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<double> w(1 + rand_index(rng, 30));
            for (double& x : w) x = rand_unit(rng) < 0.25 ? 0.0 : rand_unit(rng) * 9;
            auto p = selection_probabilities(w);
            double total = 0;
            for (double x : p) total += x;
            if (std::fabs(total - 1.0) > 1e-12) sum_ok = false;
        }
        ok &= sum_ok;
        detail << " selection-sum=" << (sum_ok ? "1" : "MISMATCH");
    }
    {  // self-fitness and determinism
        Rng rng(716);
        Network target = oracles::shuffle_gnm(50, 150, false, rng);
        NullBaseline base = null_baseline(target, 717);
        bool self_ok = fitness(target, target, base).fitness == 0.0;
        ok &= self_ok;

        GenerationConfig cfg;
        cfg.nodes = 60;
        cfg.edges = 150;
        cfg.seed = 718;
        auto tree = parse_generator("(pow k_i k_i)");
        bool det_ok = generate(tree, cfg).network.edges() == generate(tree, cfg).network.edges();
        std::vector<Network> targets{target};
        SearchConfig scfg;
        scfg.seed = 719;
        scfg.stagnation_window = 10;
        scfg.max_steps = 40;
        scfg.null_samples = 6;
        det_ok &= evolve(targets, scfg).csv() == evolve(targets, scfg).csv();
        ok &= det_ok;
        detail << " self-fitness=" << (self_ok ? "0" : "MISMATCH")
               << " determinism=" << (det_ok ? "byte-identical" : "MISMATCH");
    }
    report(7, ok, detail.str());
}

// 8. fresh uniform instances score near 1 against a uniform target
void criterion_8() {
    auto gen = parse_generator("1");
    GenerationConfig cfg;
    cfg.nodes = 200;
    cfg.edges = 1000;
    cfg.seed = 801;
    Network target = generate(gen, cfg).network;
    MetricsConfig metrics;
    MetricProfile target_profile = profile(target, metrics);
    NullBaseline base = null_baseline(target_profile, 802, metrics);

    int in_band = 0;
    std::vector<double> values;
    for (int trial = 0; trial < 30; ++trial) {
        cfg.seed = 810 + static_cast<std::uint64_t>(trial);
        Network instance = generate(gen, cfg).network;
        double f = fitness(profile(instance, metrics), target_profile, base).fitness;
        values.push_back(f);
        if (f >= 0.5 && f <= 1.6) ++in_band;
    }
    std::ostringstream detail;
    detail << "fitness in [0.5,1.6] for " << in_band << "/30 trials, mean="
           << format_double(mean(values));
    report(8, in_band >= 24, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int a = 1; a < argc; ++a) {
        if (std::strcmp(argv[a], "--only") == 0 && a + 1 < argc) {
            std::stringstream list(argv[++a]);
            std::string item;
            while (std::getline(list, item, ',')) only.insert(std::stoi(item));
        }
    }
    auto want = [&](int id) { return only.empty() || only.count(id) > 0; };

    using Clock = std::chrono::steady_clock;
    auto t0 = Clock::now();
    struct Entry {
        int id;
        void (*fn)();
    };
    const Entry entries[] = {{1, criterion_1}, {2, criterion_2}, {3, criterion_3},
                             {4, criterion_4}, {5, criterion_5}, {6, criterion_6},
                             {7, criterion_7}, {8, criterion_8}};
    for (const Entry& e : entries) {
        if (!want(e.id)) continue;
        auto start = Clock::now();
        e.fn();
        ++g_checked;
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start).count();
        std::cout << "  (criterion " << e.id << " took " << secs << "s)" << std::endl;
    }
    auto total = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - t0).count();

    int failed = 0;
    for (const Criterion& c : g_results) failed += c.passed ? 0 : 1;
    std::cout << g_checked - failed << "/" << g_checked << " criteria passed in " << total << "s"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
