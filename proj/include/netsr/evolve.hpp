#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netsr/fitness.hpp"
#include "netsr/netgen.hpp"
#include "netsr/treegen.hpp"

namespace netsr {

struct Solution {
    GeneratorTree tree;
    std::vector<FitnessReport> reports;  // one per snapshot

    std::size_t size() const { return tree.size(); }
    std::vector<double> fitness_values() const;
    double mean_dissimilarity() const;       // averaged over snapshots
    double undirected_distance_ratio() const;  // distance-metric ratio, averaged
};

/// Tracked incumbents: best fitness and shortest-within-tolerance always;
/// lowest mean dissimilarity and lowest distance-metric ratio only when
/// recombination is on (the four-solution pool).
struct SolutionPool {
    Solution best;
    Solution shortest;
    std::optional<Solution> lowest_mean;
    std::optional<Solution> lowest_distance;
};

struct SearchConfig {
    double anti_bloat_tolerance = 0.10;
    double snapshot_tolerance = 0.05;  // replaces anti_bloat in multi-snapshot runs
    int stagnation_window = 1000;
    bool recombination = true;
    double recombination_probability = 0.5;
    int max_steps = 0;  // safety valve; 0 = stop on stagnation only
    std::uint64_t seed = 0;
    int null_samples = 30;
    InitParams init;
    GenerationConfig generation;  // shape fields are filled from the targets
    MetricsConfig metrics;

    std::ostream* log_stream = nullptr;  // streams CSV rows as steps complete
    std::function<void(const SolutionPool&)> step_observer;  // test hook
};

struct StepRecord {
    std::int64_t step = 0;
    bool recombined = false;
    std::string accepted;  // "b+s+md+ud" style, "-" when nothing updated
    std::vector<double> fitness;  // candidate, per snapshot
    double mean_dissimilarity = 0.0;
    std::int32_t tree_size = 0;
};

struct RunLog {
    std::vector<StepRecord> steps;
    GeneratorTree best;
    GeneratorTree best_simplified;
    std::vector<double> best_fitness;  // per snapshot
    std::int64_t best_step = 0;        // last step that replaced the best solution
    std::int64_t last_improvement = 0;  // last step that updated any slot
    std::int64_t total_steps = 0;
    std::uint64_t seed = 0;
    std::int64_t initial_edges = 0;
    SolutionPool final_pool;

    std::string csv_header(std::size_t snapshot_count) const;
    std::string csv() const;
};

/// Evolutionary search for a generator reproducing the target snapshots.
/// `targets` holds one network per snapshot, ordered by size; the last one is
/// the full target. Stops once no pool slot has updated for
/// `stagnation_window` consecutive steps.
RunLog evolve(const std::vector<Network>& targets, SearchConfig cfg);

/// Search for a generator of the edges beyond `initial`, scored against the
/// full target only.
RunLog evolve_from_initial(const Network& initial, const Network& target, SearchConfig cfg);

}  // namespace netsr
