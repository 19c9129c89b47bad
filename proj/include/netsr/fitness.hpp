#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netsr/metrics.hpp"

namespace netsr {

/// Null reference for fitness normalization: `samples` uniform random
/// networks with the target's node and edge counts, profiled once and
/// cached. `values` holds the per-metric mean dissimilarity between the
/// target and the sample, a stable summary of how far the target itself
/// sits from random.
struct NullBaseline {
    bool directed = false;
    NodeId nodes = 0;
    std::int64_t edges = 0;
    int samples = 30;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> values;
    std::vector<MetricProfile> null_profiles;

    double value_for(const std::string& metric) const;
};

/// Uniform random network with exactly `edges` edges (G(N, M) style).
Network sample_uniform_network(NodeId nodes, std::int64_t edges, bool directed, Rng& rng);

NullBaseline null_baseline(const MetricProfile& target, std::uint64_t seed,
                           const MetricsConfig& cfg = {}, int samples = 30);
NullBaseline null_baseline(const Network& target, std::uint64_t seed,
                           const MetricsConfig& cfg = {}, int samples = 30);

struct MetricScore {
    double raw = 0.0;
    double baseline = 0.0;
    double ratio = 0.0;
};

/// Normalized comparison against a target. Per metric, the ratio of the
/// network-to-target dissimilarity over the mean dissimilarity between the
/// same network and the null sample; the denominator is recomputed per
/// evaluated network so that quirks on the generated side (a stray isolated
/// node, a thin distance tail) cancel instead of spiking the score. The
/// fitness is the max ratio, the mean dissimilarity their mean. 0 means the
/// profiles match; 1 means the network explains the target no better than
/// it explains a random one.
struct FitnessReport {
    std::vector<std::pair<std::string, MetricScore>> metrics;
    double fitness = 0.0;
    double mean_dissimilarity = 0.0;

    double ratio_for(const std::string& metric) const;
};

FitnessReport fitness(const MetricProfile& generated, const MetricProfile& target,
                      const NullBaseline& baseline, int bins = 100);
FitnessReport fitness(const Network& generated, const Network& target,
                      const NullBaseline& baseline, const MetricsConfig& cfg = {});

nlohmann::json to_json(const FitnessReport& report);
nlohmann::json to_json(const NullBaseline& baseline);
NullBaseline baseline_from_json(const nlohmann::json& j);

}  // namespace netsr
