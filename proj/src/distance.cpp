#include "netsr/distance.hpp"

#include <algorithm>
#include <deque>

namespace netsr {

std::vector<std::int32_t> bfs_distances(const Network& net, NodeId src, DistanceKind kind) {
    const NodeId n = net.node_count();
    std::vector<std::int32_t> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    std::vector<NodeId> frontier{src}, next;
    std::int32_t level = 0;
    auto expand = [&](NodeId v) {
        if (kind == DistanceKind::Undirected && net.directed()) {
            for (NodeId w : net.out_neighbors(v))
                if (dist[static_cast<std::size_t>(w)] < 0) { dist[static_cast<std::size_t>(w)] = level + 1; next.push_back(w); }
            for (NodeId w : net.in_neighbors(v))
                if (dist[static_cast<std::size_t>(w)] < 0) { dist[static_cast<std::size_t>(w)] = level + 1; next.push_back(w); }
        } else {
            auto nbrs = (kind == DistanceKind::Reverse) ? net.in_neighbors(v) : net.out_neighbors(v);
            for (NodeId w : nbrs)
                if (dist[static_cast<std::size_t>(w)] < 0) { dist[static_cast<std::size_t>(w)] = level + 1; next.push_back(w); }
        }
    };
    while (!frontier.empty()) {
        next.clear();
        for (NodeId v : frontier) expand(v);
        frontier.swap(next);
        ++level;
    }
    return dist;
}

int exact_distance(const Network& net, NodeId u, NodeId v, DistanceKind kind, int sentinel) {
    if (u == v) throw InputError("distance between a node and itself is not defined");
    auto row = bfs_distances(net, u, kind);
    std::int32_t d = row[static_cast<std::size_t>(v)];
    if (d < 0 || d > sentinel) return sentinel;
    return d;
}

DistanceCache::DistanceCache(const Network& net, int sentinel)
    : net_(&net), sentinel_(sentinel) {
    for (auto& r : rows_) r.resize(static_cast<std::size_t>(net.node_count()));
}

const DistanceCache::Row& DistanceCache::row(NodeId src, DistanceKind kind) {
    Row& r = rows_[static_cast<int>(kind)][static_cast<std::size_t>(src)];
    if (r.version != net_->version()) {
        r.d = bfs_distances(*net_, src, kind);
        r.version = net_->version();
    }
    return r;
}

int DistanceCache::distance(NodeId u, NodeId v, DistanceKind kind) {
    if (u == v) throw InputError("distance between a node and itself is not defined");
    std::int32_t d = row(u, kind).d[static_cast<std::size_t>(v)];
    if (d < 0 || d > sentinel_) return sentinel_;
    return d;
}

WalkerOracle::WalkerOracle(NodeId nodes, int reset_period)
    : nodes_(nodes), reset_period_(reset_period) {
    if (nodes < 1) throw InputError("walker oracle needs at least one node");
    if (reset_period < 1) throw InputError("walker reset period must be positive");
    matrix_.assign(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes), kInitialEstimate);
    position_.resize(static_cast<std::size_t>(nodes));
    for (NodeId v = 0; v < nodes; ++v) position_[static_cast<std::size_t>(v)] = v;
    moves_.assign(static_cast<std::size_t>(nodes), 0);
}

void WalkerOracle::advance(const Network& net, int steps, Rng& rng) {
    if (net.node_count() != nodes_) throw InputError("walker oracle bound to a different node count");
    const bool undirected = !net.directed();
    for (NodeId origin = 0; origin < nodes_; ++origin) {
        const std::size_t o = static_cast<std::size_t>(origin);
        NodeId cur = position_[o];
        std::uint8_t made = moves_[o];
        for (int s = 0; s < steps; ++s) {
            auto nbrs = net.out_neighbors(cur);
            if (!nbrs.empty()) cur = nbrs[rand_index(rng, nbrs.size())];
            ++made;
            if (cur != origin) {
                std::uint8_t& cell = matrix_[o * static_cast<std::size_t>(nodes_) + static_cast<std::size_t>(cur)];
                if (made < cell) cell = made;
                if (undirected) {
                    std::uint8_t& mirror =
                        matrix_[static_cast<std::size_t>(cur) * static_cast<std::size_t>(nodes_) + o];
                    if (made < mirror) mirror = made;
                }
            }
            if (made >= reset_period_) {
                cur = origin;
                made = 0;
            }
        }
        position_[o] = cur;
        moves_[o] = made;
    }
}

int WalkerOracle::estimate(NodeId from, NodeId to) const {
    return matrix_[static_cast<std::size_t>(from) * static_cast<std::size_t>(nodes_) +
                   static_cast<std::size_t>(to)];
}

int WalkerOracle::undirected_estimate(NodeId u, NodeId v) const {
    return std::min(estimate(u, v), estimate(v, u));
}

}  // namespace netsr
