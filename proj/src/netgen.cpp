#include "netsr/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_set>

namespace netsr {

namespace {

struct ContextDistances {
    double d, dd, dr;
};

// Distance source for candidate contexts; one per generation run.
class DistanceSource {
public:
    virtual ~DistanceSource() = default;
    virtual ContextDistances lookup(const Network& net, NodeId u, NodeId v) = 0;
    virtual void edge_added(const Network& net, Rng& rng) = 0;
    virtual const WalkerOracle* oracle() const { return nullptr; }
};

class ExactSource : public DistanceSource {
public:
    ExactSource(const Network& net, int sentinel) : cache_(net, sentinel) {}
    ContextDistances lookup(const Network& net, NodeId u, NodeId v) override {
        if (!net.directed()) {
            double d = cache_.distance(u, v, DistanceKind::Undirected);
            return {d, d, d};
        }
        return {static_cast<double>(cache_.distance(u, v, DistanceKind::Undirected)),
                static_cast<double>(cache_.distance(u, v, DistanceKind::Directed)),
                static_cast<double>(cache_.distance(u, v, DistanceKind::Reverse))};
    }
    void edge_added(const Network&, Rng&) override {}  // cache keys off net.version()

private:
    DistanceCache cache_;
};

class HeuristicSource : public DistanceSource {
public:
    HeuristicSource(NodeId nodes, int steps_per_edge)
        : oracle_(nodes), steps_(steps_per_edge) {}
    ContextDistances lookup(const Network& net, NodeId u, NodeId v) override {
        if (!net.directed()) {
            double d = oracle_.estimate(u, v);
            return {d, d, d};
        }
        return {static_cast<double>(oracle_.undirected_estimate(u, v)),
                static_cast<double>(oracle_.estimate(u, v)),
                static_cast<double>(oracle_.estimate(v, u))};
    }
    void edge_added(const Network& net, Rng& rng) override { oracle_.advance(net, steps_, rng); }
    const WalkerOracle* oracle() const override { return &oracle_; }
    WalkerOracle& walker() { return oracle_; }

private:
    WalkerOracle oracle_;
    int steps_;
};

std::int64_t open_ordered_pairs(const Network& net) {
    std::int64_t n = net.node_count();
    std::int64_t all = n * (n - 1);
    return all - (net.directed() ? net.edge_count() : 2 * net.edge_count());
}

void sample_candidates(const Network& net, std::int64_t want, Rng& rng,
                       std::vector<std::pair<NodeId, NodeId>>& out) {
    out.clear();
    const NodeId n = net.node_count();
    const std::int64_t open = open_ordered_pairs(net);
    want = std::min(want, open);
    if (want <= 0) return;

    // dense endgame: enumerate the remaining pairs and partially shuffle
    if (open <= 4 * want || open <= 64) {
        std::vector<std::pair<NodeId, NodeId>> all;
        all.reserve(static_cast<std::size_t>(open));
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = 0; v < n; ++v)
                if (u != v && !net.connected(u, v)) all.emplace_back(u, v);
        for (std::int64_t i = 0; i < want; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            rand_index(rng, all.size() - static_cast<std::size_t>(i));
            std::swap(all[static_cast<std::size_t>(i)], all[j]);
            out.push_back(all[static_cast<std::size_t>(i)]);
        }
        return;
    }

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(want) * 2);
    while (static_cast<std::int64_t>(out.size()) < want) {
        NodeId u = static_cast<NodeId>(rand_index(rng, static_cast<std::size_t>(n)));
        NodeId v = static_cast<NodeId>(rand_index(rng, static_cast<std::size_t>(n - 1)));
        if (v >= u) ++v;
        if (net.connected(u, v)) continue;
        std::uint64_t key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
                            static_cast<std::uint64_t>(v);
        if (!seen.insert(key).second) continue;
        out.emplace_back(u, v);
    }
}

EdgeContext make_context(const Network& net, NodeId u, NodeId v, double xi,
                         const ContextDistances& dist) {
    EdgeContext ctx;
    ctx.i = u;
    ctx.j = v;
    ctx.xi = xi;
    ctx.d = dist.d;
    ctx.dd = dist.dd;
    ctx.dr = dist.dr;
    if (net.directed()) {
        ctx.kin_i = static_cast<double>(net.degree(u, DegreeKind::In));
        ctx.kout_i = static_cast<double>(net.degree(u, DegreeKind::Out));
        ctx.kin_j = static_cast<double>(net.degree(v, DegreeKind::In));
        ctx.kout_j = static_cast<double>(net.degree(v, DegreeKind::Out));
        ctx.k_i = ctx.kin_i + ctx.kout_i;
        ctx.k_j = ctx.kin_j + ctx.kout_j;
    } else {
        ctx.k_i = static_cast<double>(net.degree(u));
        ctx.k_j = static_cast<double>(net.degree(v));
        ctx.kin_i = ctx.kout_i = ctx.k_i;
        ctx.kin_j = ctx.kout_j = ctx.k_j;
    }
    return ctx;
}

GenerationResult grow(Network net, const GeneratorTree& gen, const GenerationConfig& cfg,
                      bool warm_oracle) {
    Rng rng(cfg.seed);
    GenerationResult result{std::move(net), {}, cfg.seed};
    Network& g = result.network;

    std::unique_ptr<DistanceSource> dist;
    if (cfg.distance_mode == DistanceMode::Heuristic) {
        auto h = std::make_unique<HeuristicSource>(cfg.nodes, cfg.rw_steps_per_edge);
        if (warm_oracle)  // replay the walk budget the existing edges would have earned
            for (std::int64_t e = 0; e < g.edge_count(); ++e)
                h->walker().advance(g, cfg.rw_steps_per_edge, rng);
        dist = std::move(h);
    } else {
        dist = std::make_unique<ExactSource>(g, cfg.infinite_distance);
    }

    // snapshot s fires once the edge count reaches round(ratio * E)
    std::vector<std::pair<double, std::int64_t>> pending;
    for (double r : cfg.snapshot_ratios)
        pending.emplace_back(r, std::llround(r * static_cast<double>(cfg.edges)));
    std::size_t next_snapshot = 0;
    auto capture_due = [&]() {
        while (next_snapshot < pending.size() &&
               g.edge_count() >= pending[next_snapshot].second) {
            result.snapshots.emplace_back(pending[next_snapshot].first, g);
            ++next_snapshot;
        }
    };
    capture_due();

    std::vector<std::pair<NodeId, NodeId>> sample;
    std::vector<double> weights;
    while (g.edge_count() < cfg.edges) {
        std::int64_t open = open_ordered_pairs(g);
        std::int64_t want = std::min(
            open, std::max<std::int64_t>(cfg.sample_floor,
                                         std::llround(cfg.sampling_ratio * static_cast<double>(open))));
        sample_candidates(g, want, rng, sample);

        double xi = static_cast<double>(g.edge_count()) / static_cast<double>(cfg.edges);
        weights.resize(sample.size());
        for (std::size_t c = 0; c < sample.size(); ++c) {
            auto [u, v] = sample[c];
            weights[c] = evaluate(gen, make_context(g, u, v, xi, dist->lookup(g, u, v)));
        }
        auto [u, v] = sample[pick_weighted(weights, rng)];
        g.add_edge(u, v);
        dist->edge_added(g, rng);
        if (cfg.on_edge) cfg.on_edge(g, dist->oracle());
        capture_due();
    }
    return result;
}

}  // namespace

void GenerationConfig::validate() const {
    if (nodes < 2) throw InputError("generation needs at least two nodes");
    if (edges < 1) throw InputError("target edge count must be positive");
    if (edges > Network::pair_capacity(nodes, directed))
        throw InputError("target edge count exceeds pair capacity");
    if (!(sampling_ratio > 0.0 && sampling_ratio <= 1.0))
        throw InputError("sampling ratio must lie in (0, 1]");
    if (sample_floor < 1) throw InputError("sample floor must be positive");
    if (rw_steps_per_edge < 1) throw InputError("walker steps per edge must be positive");
    if (infinite_distance < 1) throw InputError("infinite distance sentinel must be positive");
    if (!snapshot_ratios.empty()) {
        for (std::size_t s = 0; s < snapshot_ratios.size(); ++s) {
            double r = snapshot_ratios[s];
            if (!(r > 0.0 && r <= 1.0)) throw InputError("snapshot ratios must lie in (0, 1]");
            if (s > 0 && r <= snapshot_ratios[s - 1])
                throw InputError("snapshot ratios must be strictly increasing");
        }
        if (snapshot_ratios.back() != 1.0)
            throw InputError("the last snapshot ratio must be 1.0");
    }
}

std::vector<double> selection_probabilities(std::span<const double> weights) {
    std::vector<double> p(weights.size());
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) {
        std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(weights.size()));
        return p;
    }
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = weights[i] / total;
    return p;
}

std::size_t pick_weighted(std::span<const double> weights, Rng& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) return rand_index(rng, weights.size());
    double r = rand_unit(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (r < acc) return i;
    }
    return weights.size() - 1;
}

GenerationResult generate(const GeneratorTree& gen, const GenerationConfig& cfg) {
    cfg.validate();
    if (gen.empty()) throw InputError("empty generator");
    Network net(cfg.nodes, cfg.directed, cfg.edges);
    return grow(std::move(net), gen, cfg, false);
}

GenerationResult generate_from(const Network& initial, const GeneratorTree& gen,
                               const GenerationConfig& cfg) {
    cfg.validate();
    if (gen.empty()) throw InputError("empty generator");
    if (initial.node_count() != cfg.nodes)
        throw InputError("initial network node count does not match the configuration");
    if (initial.directed() != cfg.directed)
        throw InputError("initial network orientation does not match the configuration");
    if (initial.edge_count() >= cfg.edges)
        throw InputError("initial network already holds the target edge count");
    Network net = initial;
    net.set_target_edge_count(cfg.edges);
    return grow(std::move(net), gen, cfg, true);
}

}  // namespace netsr
