#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "netsr/common.hpp"

namespace netsr {

enum class DegreeKind { Total, In, Out };

/// Growing graph over a fixed node set 0..N-1. Edges are append-only, with
/// no self-loops and no duplicates. `target_edge_count` is the number of
/// edges the finished network is planned to hold; edge_ratio() is the share
/// already added.
class Network {
public:
    Network(NodeId nodes, bool directed, std::int64_t target_edges);

    NodeId node_count() const { return nodes_; }
    bool directed() const { return directed_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    std::int64_t target_edge_count() const { return target_edges_; }
    void set_target_edge_count(std::int64_t target);
    double edge_ratio() const { return static_cast<double>(edge_count()) / static_cast<double>(target_edges_); }

    void add_edge(NodeId u, NodeId v);

    /// Directed arc u->v; for undirected networks, membership of {u,v}.
    bool has_arc(NodeId u, NodeId v) const;
    /// True if the pair is linked in either orientation.
    bool connected(NodeId u, NodeId v) const;

    /// Edges in insertion order.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    std::span<const NodeId> out_neighbors(NodeId v) const;
    std::span<const NodeId> in_neighbors(NodeId v) const;

    /// Validated degree lookup. In/Out are only defined for directed
    /// networks; Total is in+out when directed, incident count otherwise.
    std::int64_t degree(NodeId v, DegreeKind kind = DegreeKind::Total) const;

    /// Bumped on every edge insertion; lets caches notice staleness.
    std::uint64_t version() const { return version_; }

    /// Number of distinct edges a network of this shape can hold.
    static std::int64_t pair_capacity(NodeId nodes, bool directed);

private:
    void check_node(NodeId v) const;
    std::uint64_t arc_key(NodeId u, NodeId v) const;

    NodeId nodes_;
    bool directed_;
    std::int64_t target_edges_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;  // empty when undirected
    std::unordered_set<std::uint64_t> present_;
    std::uint64_t version_ = 0;
};

}  // namespace netsr
