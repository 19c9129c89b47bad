#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netsr/census.hpp"
#include "netsr/distance.hpp"
#include "netsr/network.hpp"
#include "netsr/pagerank.hpp"

namespace netsr {

struct MetricsConfig {
    int bins = 100;
    int infinite_distance = kDefaultInfiniteDistance;
    PageRankParams pagerank;
};

/// Structural fingerprint of one network. Degree and PageRank entries are
/// per-node samples; distance entries count node pairs per hop category
/// 1..infinite_distance plus a final bucket for unreachable (or farther)
/// pairs; the census holds triad class counts. Directed networks carry the
/// oriented variants, undirected ones the plain set. Measurement always uses
/// exact distances.
struct MetricProfile {
    bool directed = false;
    NodeId nodes = 0;
    std::int64_t edges = 0;
    std::vector<double> degree;                        // undirected
    std::vector<double> in_degree, out_degree;         // directed
    std::vector<double> pagerank, pagerank_reverse;    // reverse: directed only
    std::vector<std::int64_t> distance, distance_reverse;
    std::vector<std::int64_t> census;
};

MetricProfile profile(const Network& net, const MetricsConfig& cfg = {});

/// One-dimensional earth mover's distance between two samples, measured in
/// bin widths: both samples are histogrammed on `bins` equal-width bins over
/// the union of their ranges, normalized to unit mass, and the cumulative
/// differences summed.
double emd(std::span<const double> a, std::span<const double> b, int bins = 100);

/// Count-vector dissimilarity: sum over categories of |target - generated|
/// divided by the generated count (1 where that count is zero). Asymmetric
/// on purpose: the generated side sits in the denominator.
double ratio_dissimilarity(std::span<const std::int64_t> target,
                           std::span<const std::int64_t> generated);

/// Per-metric raw dissimilarities between a generated and a target profile,
/// in a fixed order. Degree and PageRank use emd, the census uses
/// ratio_dissimilarity on the class counts, and the distance categories use
/// the same formula on cumulative pair counts (pairs within k hops), whose
/// bulk-sized denominators keep sparse far-distance categories from
/// dominating the score.
std::vector<std::pair<std::string, double>> raw_dissimilarities(const MetricProfile& generated,
                                                                const MetricProfile& target,
                                                                int bins);

}  // namespace netsr
