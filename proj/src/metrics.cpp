#include "netsr/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace netsr {

namespace {

std::vector<std::int64_t> distance_counts(const Network& net, DistanceKind kind, int sentinel) {
    // categories 1..sentinel, then one bucket for unreachable / farther pairs
    std::vector<std::int64_t> counts(static_cast<std::size_t>(sentinel) + 2, 0);
    const NodeId n = net.node_count();
    for (NodeId src = 0; src < n; ++src) {
        auto row = bfs_distances(net, src, kind);
        // directed: all ordered pairs; undirected: each unordered pair once
        for (NodeId v = net.directed() ? 0 : src + 1; v < n; ++v) {
            if (v == src) continue;
            std::int32_t d = row[static_cast<std::size_t>(v)];
            if (d < 1 || d > sentinel)
                ++counts[static_cast<std::size_t>(sentinel) + 1];
            else
                ++counts[static_cast<std::size_t>(d)];
        }
    }
    return counts;
}

}  // namespace

MetricProfile profile(const Network& net, const MetricsConfig& cfg) {
    if (net.node_count() < 3) throw InputError("profile requires at least 3 nodes");
    MetricProfile p;
    p.directed = net.directed();
    p.nodes = net.node_count();
    p.edges = net.edge_count();
    const NodeId n = net.node_count();

    if (net.directed()) {
        p.in_degree.reserve(static_cast<std::size_t>(n));
        p.out_degree.reserve(static_cast<std::size_t>(n));
        for (NodeId v = 0; v < n; ++v) {
            p.in_degree.push_back(static_cast<double>(net.degree(v, DegreeKind::In)));
            p.out_degree.push_back(static_cast<double>(net.degree(v, DegreeKind::Out)));
        }
        p.pagerank = pagerank(net, cfg.pagerank, PageRankDirection::Direct).scores;
        p.pagerank_reverse = pagerank(net, cfg.pagerank, PageRankDirection::Reverse).scores;
        p.distance = distance_counts(net, DistanceKind::Directed, cfg.infinite_distance);
        // over all ordered pairs the reverse-distance multiset is the
        // transpose of the directed one, so the category counts coincide
        p.distance_reverse = p.distance;
    } else {
        p.degree.reserve(static_cast<std::size_t>(n));
        for (NodeId v = 0; v < n; ++v) p.degree.push_back(static_cast<double>(net.degree(v)));
        p.pagerank = pagerank(net, cfg.pagerank, PageRankDirection::Direct).scores;
        p.distance = distance_counts(net, DistanceKind::Undirected, cfg.infinite_distance);
    }
    p.census = triad_census(net).counts;
    return p;
}

double emd(std::span<const double> a, std::span<const double> b, int bins) {
    if (a.empty() || b.empty()) throw InputError("emd requires non-empty samples");
    if (bins < 1) throw InputError("emd requires at least one bin");
    double lo = a[0], hi = a[0];
    for (double x : a) { lo = std::min(lo, x); hi = std::max(hi, x); }
    for (double x : b) { lo = std::min(lo, x); hi = std::max(hi, x); }
    if (hi <= lo) return 0.0;

    const double width = (hi - lo) / static_cast<double>(bins);
    auto histogram = [&](std::span<const double> sample) {
        std::vector<double> h(static_cast<std::size_t>(bins), 0.0);
        for (double x : sample) {
            auto idx = static_cast<std::size_t>((x - lo) / width);
            if (idx >= h.size()) idx = h.size() - 1;
            h[idx] += 1.0;
        }
        for (double& m : h) m /= static_cast<double>(sample.size());
        return h;
    };
    std::vector<double> ha = histogram(a), hb = histogram(b);

    double cum = 0.0, total = 0.0;
    for (std::size_t i = 0; i < ha.size(); ++i) {
        cum += ha[i] - hb[i];
        total += std::fabs(cum);
    }
    return total;
}

double ratio_dissimilarity(std::span<const std::int64_t> target,
                           std::span<const std::int64_t> generated) {
    if (target.size() != generated.size())
        throw InputError("ratio dissimilarity needs equal-length count vectors");
    double total = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        double denom = generated[i] != 0 ? static_cast<double>(generated[i]) : 1.0;
        total += std::fabs(static_cast<double>(target[i] - generated[i])) / denom;
    }
    return total;
}

namespace {

// Distance categories are compared through their running totals: category k
// contributes |C_k - C'_k| / C'_k where C_k counts the pairs within k hops.
// Sparse individual categories (a handful of distance-5 pairs, the
// unreachable bucket of a straggler node) then move the score in proportion
// to their share of all pairs instead of by whole raw counts, which keeps
// the metric stable between same-process networks.
double distance_dissimilarity(std::span<const std::int64_t> target,
                              std::span<const std::int64_t> generated) {
    if (target.size() != generated.size())
        throw InputError("distance dissimilarity needs equal-length count vectors");
    std::vector<std::int64_t> cum_target(target.size()), cum_generated(generated.size());
    std::int64_t ct = 0, cg = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        ct += target[i];
        cg += generated[i];
        cum_target[i] = ct;
        cum_generated[i] = cg;
    }
    return ratio_dissimilarity(cum_target, cum_generated);
}

}  // namespace

std::vector<std::pair<std::string, double>> raw_dissimilarities(const MetricProfile& generated,
                                                                const MetricProfile& target,
                                                                int bins) {
    if (generated.directed != target.directed)
        throw InputError("cannot compare directed and undirected profiles");
    std::vector<std::pair<std::string, double>> out;
    if (generated.directed) {
        out.emplace_back("in_degree", emd(generated.in_degree, target.in_degree, bins));
        out.emplace_back("out_degree", emd(generated.out_degree, target.out_degree, bins));
        out.emplace_back("pagerank", emd(generated.pagerank, target.pagerank, bins));
        out.emplace_back("pagerank_reverse",
                         emd(generated.pagerank_reverse, target.pagerank_reverse, bins));
        out.emplace_back("distance", distance_dissimilarity(target.distance, generated.distance));
        out.emplace_back("distance_reverse", distance_dissimilarity(target.distance_reverse,
                                                                    generated.distance_reverse));
    } else {
        out.emplace_back("degree", emd(generated.degree, target.degree, bins));
        out.emplace_back("pagerank", emd(generated.pagerank, target.pagerank, bins));
        out.emplace_back("distance", distance_dissimilarity(target.distance, generated.distance));
    }
    out.emplace_back("census", ratio_dissimilarity(target.census, generated.census));
    return out;
}

}  // namespace netsr
