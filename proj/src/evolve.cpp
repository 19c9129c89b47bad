#include "netsr/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "netsr/parse.hpp"
#include "netsr/simplify.hpp"

namespace netsr {

std::vector<double> Solution::fitness_values() const {
    std::vector<double> f;
    f.reserve(reports.size());
    for (const auto& r : reports) f.push_back(r.fitness);
    return f;
}

double Solution::mean_dissimilarity() const {
    double sum = 0.0;
    for (const auto& r : reports) sum += r.mean_dissimilarity;
    return sum / static_cast<double>(reports.size());
}

double Solution::undirected_distance_ratio() const {
    double sum = 0.0;
    for (const auto& r : reports) {
        double v = r.ratio_for("distance");
        for (const auto& [name, score] : r.metrics)
            if (name == "distance_reverse") v = (v + score.ratio) / 2.0;
        sum += v;
    }
    return sum / static_cast<double>(reports.size());
}

namespace {

struct Loop {
    const std::vector<Network>& targets;
    SearchConfig& cfg;
    const Network* initial;  // null for from-scratch runs
    Rng rng;

    std::vector<MetricProfile> target_profiles;
    std::vector<NullBaseline> baselines;
    double tolerance = 0.10;

    explicit Loop(const std::vector<Network>& t, SearchConfig& c, const Network* init)
        : targets(t), cfg(c), initial(init), rng(c.seed) {}

    Solution evaluate_candidate(GeneratorTree tree) {
        GenerationConfig gen_cfg = cfg.generation;
        gen_cfg.seed = rng();
        GenerationResult result = initial ? generate_from(*initial, tree, gen_cfg)
                                          : generate(tree, gen_cfg);
        Solution sol;
        sol.tree = std::move(tree);
        sol.reports.reserve(targets.size());
        for (std::size_t s = 0; s < targets.size(); ++s) {
            MetricProfile p = profile(result.snapshots[s].second, cfg.metrics);
            sol.reports.push_back(fitness(p, target_profiles[s], baselines[s], cfg.metrics.bins));
        }
        return sol;
    }

    static bool improves_everywhere(const Solution& cand, const Solution& incumbent) {
        for (std::size_t s = 0; s < cand.reports.size(); ++s)
            if (!(cand.reports[s].fitness < incumbent.reports[s].fitness)) return false;
        return true;
    }

    bool within_tolerance(const Solution& cand, const Solution& best) const {
        for (std::size_t s = 0; s < cand.reports.size(); ++s)
            if (cand.reports[s].fitness > (1.0 + tolerance) * best.reports[s].fitness) return false;
        return true;
    }

    RunLog run() {
        RunLog log;
        log.seed = cfg.seed;
        log.initial_edges = initial ? initial->edge_count() : 0;

        tolerance = targets.size() > 1 ? cfg.snapshot_tolerance : cfg.anti_bloat_tolerance;

        target_profiles.reserve(targets.size());
        for (const Network& t : targets) target_profiles.push_back(profile(t, cfg.metrics));
        for (std::size_t s = 0; s < targets.size(); ++s)
            baselines.push_back(null_baseline(target_profiles[s], rng(), cfg.metrics, cfg.null_samples));

        SolutionPool pool;
        pool.best = evaluate_candidate(random_tree(cfg.init, rng));
        pool.shortest = pool.best;
        if (cfg.recombination) {
            pool.lowest_mean = pool.best;
            pool.lowest_distance = pool.best;
        }

        if (cfg.log_stream) *cfg.log_stream << log.csv_header(targets.size());

        std::int64_t step = 0;
        std::int64_t since_update = 0;
        while (since_update < cfg.stagnation_window &&
               (cfg.max_steps == 0 || step < cfg.max_steps)) {
            ++step;

            std::vector<Solution*> slots{&pool.best, &pool.shortest};
            if (cfg.recombination) {
                slots.push_back(&*pool.lowest_mean);
                slots.push_back(&*pool.lowest_distance);
            }
            std::size_t parent_idx = rand_index(rng, slots.size());
            Solution* parent = slots[parent_idx];

            bool recombined = false;
            GeneratorTree cand_tree;
            if (cfg.recombination && rand_unit(rng) < cfg.recombination_probability) {
                std::size_t other = rand_index(rng, slots.size() - 1);
                if (other >= parent_idx) ++other;
                cand_tree = recombine(parent->tree, slots[other]->tree, rng);
                recombined = true;
            } else {
                cand_tree = mutate(parent->tree, cfg.init, rng);
            }
            Solution cand = evaluate_candidate(std::move(cand_tree));

            std::string accepted;
            auto mark = [&](const char* tag) {
                if (!accepted.empty()) accepted += '+';
                accepted += tag;
            };

            if (improves_everywhere(cand, pool.best)) {
                pool.best = cand;
                log.best_step = step;
                mark("b");
                // revalidate the shortest slot against the new best
                if (pool.shortest.size() > pool.best.size() ||
                    !within_tolerance(pool.shortest, pool.best)) {
                    pool.shortest = pool.best;
                    mark("s");
                }
            }
            if (cand.size() < pool.shortest.size() && within_tolerance(cand, pool.best)) {
                pool.shortest = cand;
                if (accepted.find('s') == std::string::npos) mark("s");
            }
            if (cfg.recombination) {
                if (cand.mean_dissimilarity() < pool.lowest_mean->mean_dissimilarity()) {
                    *pool.lowest_mean = cand;
                    mark("md");
                }
                if (cand.undirected_distance_ratio() <
                    pool.lowest_distance->undirected_distance_ratio()) {
                    *pool.lowest_distance = cand;
                    mark("ud");
                }
            }

            if (accepted.empty()) {
                ++since_update;
                accepted = "-";
            } else {
                since_update = 0;
                log.last_improvement = step;
            }

            StepRecord rec;
            rec.step = step;
            rec.recombined = recombined;
            rec.accepted = accepted;
            rec.fitness = cand.fitness_values();
            rec.mean_dissimilarity = cand.mean_dissimilarity();
            rec.tree_size = static_cast<std::int32_t>(cand.size());
            if (cfg.log_stream) {
                std::ostringstream row;
                append_csv_row(row, rec);
                *cfg.log_stream << row.str();
            }
            log.steps.push_back(std::move(rec));

            if (cfg.step_observer) cfg.step_observer(pool);
        }

        log.total_steps = step;
        log.best = pool.best.tree;
        log.best_simplified = simplify(pool.best.tree);
        log.best_fitness = pool.best.fitness_values();
        log.final_pool = std::move(pool);
        return log;
    }

    static void append_csv_row(std::ostream& out, const StepRecord& rec) {
        out << rec.step << ',' << (rec.recombined ? "recombine" : "mutate") << ',' << rec.accepted;
        for (double f : rec.fitness) out << ',' << format_double(f);
        out << ',' << format_double(rec.mean_dissimilarity) << ',' << rec.tree_size << '\n';
    }
};

void validate_targets(const std::vector<Network>& targets) {
    if (targets.empty()) throw InputError("evolve needs at least one target snapshot");
    for (std::size_t s = 0; s < targets.size(); ++s) {
        if (targets[s].node_count() != targets[0].node_count())
            throw InputError("target snapshots must share the node count");
        if (targets[s].directed() != targets[0].directed())
            throw InputError("target snapshots must share the orientation");
        if (s > 0 && targets[s].edge_count() <= targets[s - 1].edge_count())
            throw InputError("target snapshots must have strictly increasing edge counts");
    }
}

}  // namespace

std::string RunLog::csv_header(std::size_t snapshot_count) const {
    std::string h = "step,proposal,accepted_slots";
    for (std::size_t s = 1; s <= snapshot_count; ++s) h += ",fitness_s" + std::to_string(s);
    h += ",mean_dissim,tree_size\n";
    return h;
}

std::string RunLog::csv() const {
    std::ostringstream out;
    out << csv_header(best_fitness.size());
    for (const auto& rec : steps) Loop::append_csv_row(out, rec);
    return out.str();
}

RunLog evolve(const std::vector<Network>& targets, SearchConfig cfg) {
    validate_targets(targets);
    const Network& final_target = targets.back();

    cfg.generation.nodes = final_target.node_count();
    cfg.generation.edges = final_target.edge_count();
    cfg.generation.directed = final_target.directed();
    cfg.init.directed = final_target.directed();
    cfg.generation.snapshot_ratios.clear();
    for (const Network& t : targets)
        cfg.generation.snapshot_ratios.push_back(static_cast<double>(t.edge_count()) /
                                                 static_cast<double>(final_target.edge_count()));
    cfg.generation.snapshot_ratios.back() = 1.0;
    cfg.generation.validate();

    Loop loop(targets, cfg, nullptr);
    return loop.run();
}

RunLog evolve_from_initial(const Network& initial, const Network& target, SearchConfig cfg) {
    if (initial.node_count() != target.node_count())
        throw InputError("initial network and target must share the node count");
    if (initial.directed() != target.directed())
        throw InputError("initial network and target must share the orientation");
    if (initial.edge_count() >= target.edge_count())
        throw InputError("initial network must have fewer edges than the target");

    std::vector<Network> targets{target};
    cfg.generation.nodes = target.node_count();
    cfg.generation.edges = target.edge_count();
    cfg.generation.directed = target.directed();
    cfg.init.directed = target.directed();
    cfg.generation.snapshot_ratios = {1.0};
    cfg.generation.validate();

    Loop loop(targets, cfg, &initial);
    return loop.run();
}

}  // namespace netsr
