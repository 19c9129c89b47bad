#include "netsr/fitness.hpp"

#include <algorithm>
#include <unordered_set>

namespace netsr {

namespace {
constexpr double kBaselineFloor = 1e-9;
}

double NullBaseline::value_for(const std::string& metric) const {
    for (const auto& [name, v] : values)
        if (name == metric) return v;
    throw InputError("baseline has no metric named " + metric);
}

double FitnessReport::ratio_for(const std::string& metric) const {
    for (const auto& [name, score] : metrics)
        if (name == metric) return score.ratio;
    throw InputError("report has no metric named " + metric);
}

Network sample_uniform_network(NodeId nodes, std::int64_t edges, bool directed, Rng& rng) {
    std::int64_t capacity = Network::pair_capacity(nodes, directed);
    if (edges > capacity) throw InputError("edge count exceeds pair capacity");
    Network net(nodes, directed, std::max<std::int64_t>(edges, 1));

    if (edges > capacity / 2) {
        // dense: enumerate and partially shuffle
        std::vector<std::pair<NodeId, NodeId>> all;
        all.reserve(static_cast<std::size_t>(capacity));
        for (NodeId u = 0; u < nodes; ++u)
            for (NodeId v = directed ? 0 : u + 1; v < nodes; ++v)
                if (u != v) all.emplace_back(u, v);
        for (std::int64_t i = 0; i < edges; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            rand_index(rng, all.size() - static_cast<std::size_t>(i));
            std::swap(all[static_cast<std::size_t>(i)], all[j]);
            net.add_edge(all[static_cast<std::size_t>(i)].first, all[static_cast<std::size_t>(i)].second);
        }
        return net;
    }

    while (net.edge_count() < edges) {
        NodeId u = static_cast<NodeId>(rand_index(rng, static_cast<std::size_t>(nodes)));
        NodeId v = static_cast<NodeId>(rand_index(rng, static_cast<std::size_t>(nodes - 1)));
        if (v >= u) ++v;
        if (!directed && u > v) std::swap(u, v);
        if (net.has_arc(u, v)) continue;
        net.add_edge(u, v);
    }
    return net;
}

NullBaseline null_baseline(const MetricProfile& target, std::uint64_t seed,
                           const MetricsConfig& cfg, int samples) {
    if (samples < 1) throw InputError("baseline needs at least one sample");
    if (target.edges < 1) throw InputError("baseline target needs at least one edge");
    NullBaseline base;
    base.directed = target.directed;
    base.nodes = target.nodes;
    base.edges = target.edges;
    base.samples = samples;
    base.seed = seed;

    Rng rng(seed);
    std::vector<double> sums;
    std::vector<std::string> names;
    base.null_profiles.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
        Network instance = sample_uniform_network(target.nodes, target.edges, target.directed, rng);
        base.null_profiles.push_back(profile(instance, cfg));
        auto raws = raw_dissimilarities(base.null_profiles.back(), target, cfg.bins);
        if (sums.empty()) {
            sums.assign(raws.size(), 0.0);
            for (const auto& [name, v] : raws) names.push_back(name);
        }
        for (std::size_t i = 0; i < raws.size(); ++i) sums[i] += raws[i].second;
    }
    for (std::size_t i = 0; i < sums.size(); ++i) {
        double mean = sums[i] / static_cast<double>(samples);
        base.values.emplace_back(names[i], std::max(mean, kBaselineFloor));
    }
    return base;
}

NullBaseline null_baseline(const Network& target, std::uint64_t seed, const MetricsConfig& cfg,
                           int samples) {
    return null_baseline(profile(target, cfg), seed, cfg, samples);
}

FitnessReport fitness(const MetricProfile& generated, const MetricProfile& target,
                      const NullBaseline& baseline, int bins) {
    if (generated.directed != target.directed)
        throw InputError("cannot compare directed and undirected networks");
    if (baseline.directed != target.directed || baseline.nodes != target.nodes)
        throw InputError("baseline was built for a different target");
    if (baseline.null_profiles.empty())
        throw InputError("baseline carries no null profiles");

    auto raws = raw_dissimilarities(generated, target, bins);
    std::vector<double> denominators(raws.size(), 0.0);
    for (const MetricProfile& null_profile : baseline.null_profiles) {
        auto null_raws = raw_dissimilarities(generated, null_profile, bins);
        for (std::size_t i = 0; i < raws.size(); ++i) denominators[i] += null_raws[i].second;
    }

    FitnessReport report;
    double sum = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < raws.size(); ++i) {
        MetricScore score;
        score.raw = raws[i].second;
        score.baseline = std::max(denominators[i] / static_cast<double>(baseline.null_profiles.size()),
                                  kBaselineFloor);
        score.ratio = score.raw / score.baseline;
        sum += score.ratio;
        worst = std::max(worst, score.ratio);
        report.metrics.emplace_back(raws[i].first, score);
    }
    report.fitness = worst;
    report.mean_dissimilarity = sum / static_cast<double>(raws.size());
    return report;
}

FitnessReport fitness(const Network& generated, const Network& target,
                      const NullBaseline& baseline, const MetricsConfig& cfg) {
    return fitness(profile(generated, cfg), profile(target, cfg), baseline, cfg.bins);
}

nlohmann::json to_json(const FitnessReport& report) {
    nlohmann::json j;
    for (const auto& [name, score] : report.metrics)
        j[name] = {{"raw", score.raw}, {"baseline", score.baseline}, {"ratio", score.ratio}};
    j["fitness"] = report.fitness;
    j["mean_dissimilarity"] = report.mean_dissimilarity;
    return j;
}

namespace {

nlohmann::json profile_to_json(const MetricProfile& p) {
    return {{"directed", p.directed},
            {"nodes", p.nodes},
            {"edges", p.edges},
            {"degree", p.degree},
            {"in_degree", p.in_degree},
            {"out_degree", p.out_degree},
            {"pagerank", p.pagerank},
            {"pagerank_reverse", p.pagerank_reverse},
            {"distance", p.distance},
            {"distance_reverse", p.distance_reverse},
            {"census", p.census}};
}

MetricProfile profile_from_json(const nlohmann::json& j) {
    MetricProfile p;
    p.directed = j.at("directed").get<bool>();
    p.nodes = j.at("nodes").get<NodeId>();
    p.edges = j.at("edges").get<std::int64_t>();
    p.degree = j.at("degree").get<std::vector<double>>();
    p.in_degree = j.at("in_degree").get<std::vector<double>>();
    p.out_degree = j.at("out_degree").get<std::vector<double>>();
    p.pagerank = j.at("pagerank").get<std::vector<double>>();
    p.pagerank_reverse = j.at("pagerank_reverse").get<std::vector<double>>();
    p.distance = j.at("distance").get<std::vector<std::int64_t>>();
    p.distance_reverse = j.at("distance_reverse").get<std::vector<std::int64_t>>();
    p.census = j.at("census").get<std::vector<std::int64_t>>();
    return p;
}

}  // namespace

nlohmann::json to_json(const NullBaseline& baseline) {
    nlohmann::json values;
    for (const auto& [name, v] : baseline.values) values[name] = v;
    nlohmann::json profiles = nlohmann::json::array();
    for (const MetricProfile& p : baseline.null_profiles) profiles.push_back(profile_to_json(p));
    return {{"directed", baseline.directed}, {"nodes", baseline.nodes},
            {"edges", baseline.edges},       {"samples", baseline.samples},
            {"seed", baseline.seed},         {"values", values},
            {"null_profiles", profiles}};
}

NullBaseline baseline_from_json(const nlohmann::json& j) {
    NullBaseline base;
    try {
        base.directed = j.at("directed").get<bool>();
        base.nodes = j.at("nodes").get<NodeId>();
        base.edges = j.at("edges").get<std::int64_t>();
        base.samples = j.at("samples").get<int>();
        base.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& [name, v] : j.at("values").items())
            base.values.emplace_back(name, v.get<double>());
        for (const auto& p : j.at("null_profiles")) base.null_profiles.push_back(profile_from_json(p));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed baseline cache: ") + e.what());
    }
    return base;
}

}  // namespace netsr
