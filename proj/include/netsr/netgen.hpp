#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "netsr/distance.hpp"
#include "netsr/expr.hpp"
#include "netsr/network.hpp"

namespace netsr {

struct GenerationConfig {
    NodeId nodes = 0;
    std::int64_t edges = 0;
    bool directed = false;
    double sampling_ratio = 0.0006;
    int sample_floor = 2;
    DistanceMode distance_mode = DistanceMode::Heuristic;
    int rw_steps_per_edge = 5;
    int infinite_distance = kDefaultInfiniteDistance;
    std::vector<double> snapshot_ratios;  // ascending, last must be 1.0
    std::uint64_t seed = 0;

    /// Instrumentation hook, called after every edge addition. The oracle
    /// pointer is null in exact mode. Must not touch the run's rng state.
    std::function<void(const Network&, const WalkerOracle*)> on_edge;

    void validate() const;
};

struct GenerationResult {
    Network network;
    std::vector<std::pair<double, Network>> snapshots;
    std::uint64_t seed = 0;
};

/// Normalized selection weights: w / sum(w), or uniform when every weight
/// is zero. Always sums to 1.
std::vector<double> selection_probabilities(std::span<const double> weights);

/// One stochastic pick proportional to weight (uniform on all-zero weights).
std::size_t pick_weighted(std::span<const double> weights, Rng& rng);

/// Grows a network edge by edge: sample candidate ordered pairs, weight them
/// with the generator, pick one, repeat until the target edge count.
GenerationResult generate(const GeneratorTree& gen, const GenerationConfig& cfg);

/// Same loop, continuing from an existing network. The edge ratio counts the
/// pre-existing edges.
GenerationResult generate_from(const Network& initial, const GeneratorTree& gen,
                               const GenerationConfig& cfg);

}  // namespace netsr
