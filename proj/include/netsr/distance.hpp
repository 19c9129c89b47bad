#pragma once

#include <cstdint>
#include <vector>

#include "netsr/common.hpp"
#include "netsr/network.hpp"

namespace netsr {

enum class DistanceKind { Undirected, Directed, Reverse };
enum class DistanceMode { Exact, Heuristic };

inline constexpr int kDefaultInfiniteDistance = 10;

/// Hop counts from `src` following the requested edge orientation
/// (Undirected ignores direction, Reverse walks incoming arcs, so the row
/// holds d(x -> src) per x). Unreachable nodes get -1.
std::vector<std::int32_t> bfs_distances(const Network& net, NodeId src, DistanceKind kind);

/// Shortest hop count between two distinct nodes, capped at `sentinel`;
/// `sentinel` is also returned when no path exists.
int exact_distance(const Network& net, NodeId u, NodeId v, DistanceKind kind,
                   int sentinel = kDefaultInfiniteDistance);

/// Per-source BFS rows, recomputed lazily whenever the network has grown
/// since the row was filled.
class DistanceCache {
public:
    explicit DistanceCache(const Network& net, int sentinel = kDefaultInfiniteDistance);

    /// Same contract as exact_distance.
    int distance(NodeId u, NodeId v, DistanceKind kind);

private:
    struct Row {
        std::uint64_t version = ~std::uint64_t{0};
        std::vector<std::int32_t> d;
    };
    const Row& row(NodeId src, DistanceKind kind);

    const Network* net_;
    int sentinel_;
    std::vector<Row> rows_[3];
};

/// Random-walk hop-count estimator. One walker per node records the step
/// count of first visits into an N x N matrix initialised to 6; entries only
/// ever decrease. Walkers advance on demand and teleport back to their
/// origin after `reset_period` accumulated moves.
class WalkerOracle {
public:
    static constexpr std::uint8_t kInitialEstimate = 6;

    explicit WalkerOracle(NodeId nodes, int reset_period = 5);

    /// Advance every walker by `steps` moves over the current topology.
    /// A walker whose node has no outgoing edge stays put for the move.
    void advance(const Network& net, int steps, Rng& rng);

    /// Estimated hop count from `from` to `to`, in [1, 6].
    int estimate(NodeId from, NodeId to) const;

    /// Orientation-free estimate: min over both directions.
    int undirected_estimate(NodeId u, NodeId v) const;

    NodeId node_count() const { return nodes_; }
    int reset_period() const { return reset_period_; }

private:
    NodeId nodes_;
    int reset_period_;
    std::vector<std::uint8_t> matrix_;
    std::vector<NodeId> position_;
    std::vector<std::uint8_t> moves_;
};

}  // namespace netsr
