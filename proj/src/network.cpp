#include "netsr/network.hpp"

namespace netsr {

Network::Network(NodeId nodes, bool directed, std::int64_t target_edges)
    : nodes_(nodes), directed_(directed), target_edges_(target_edges) {
    if (nodes < 1) throw InputError("network needs at least one node");
    if (target_edges < 1) throw InputError("target edge count must be positive");
    if (target_edges > pair_capacity(nodes, directed))
        throw InputError("target edge count exceeds pair capacity");
    out_.resize(static_cast<std::size_t>(nodes));
    if (directed) in_.resize(static_cast<std::size_t>(nodes));
}

std::int64_t Network::pair_capacity(NodeId nodes, bool directed) {
    std::int64_t n = nodes;
    return directed ? n * (n - 1) : n * (n - 1) / 2;
}

void Network::set_target_edge_count(std::int64_t target) {
    if (target < 1 || target < edge_count())
        throw InputError("target edge count must cover existing edges");
    if (target > pair_capacity(nodes_, directed_))
        throw InputError("target edge count exceeds pair capacity");
    target_edges_ = target;
}

void Network::check_node(NodeId v) const {
    if (v < 0 || v >= nodes_) throw InputError("unknown node id " + std::to_string(v));
}

std::uint64_t Network::arc_key(NodeId u, NodeId v) const {
    if (!directed_ && u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(nodes_) +
           static_cast<std::uint64_t>(v);
}

bool Network::has_arc(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return present_.count(arc_key(u, v)) != 0;
}

bool Network::connected(NodeId u, NodeId v) const {
    if (directed_) return has_arc(u, v) || has_arc(v, u);
    return has_arc(u, v);
}

void Network::add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) throw InputError("self-loops are not allowed");
    if (present_.count(arc_key(u, v)))
        throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    present_.insert(arc_key(u, v));
    edges_.emplace_back(u, v);
    out_[static_cast<std::size_t>(u)].push_back(v);
    if (directed_) {
        in_[static_cast<std::size_t>(v)].push_back(u);
    } else {
        out_[static_cast<std::size_t>(v)].push_back(u);
    }
    ++version_;
}

std::span<const NodeId> Network::out_neighbors(NodeId v) const {
    check_node(v);
    return out_[static_cast<std::size_t>(v)];
}

std::span<const NodeId> Network::in_neighbors(NodeId v) const {
    check_node(v);
    if (!directed_) return out_[static_cast<std::size_t>(v)];
    return in_[static_cast<std::size_t>(v)];
}

std::int64_t Network::degree(NodeId v, DegreeKind kind) const {
    check_node(v);
    if (!directed_) {
        if (kind != DegreeKind::Total)
            throw InputError("in/out degree undefined for undirected networks");
        return static_cast<std::int64_t>(out_[static_cast<std::size_t>(v)].size());
    }
    switch (kind) {
        case DegreeKind::In: return static_cast<std::int64_t>(in_[static_cast<std::size_t>(v)].size());
        case DegreeKind::Out: return static_cast<std::int64_t>(out_[static_cast<std::size_t>(v)].size());
        case DegreeKind::Total:
            return static_cast<std::int64_t>(in_[static_cast<std::size_t>(v)].size() +
                                             out_[static_cast<std::size_t>(v)].size());
    }
    return 0;
}

}  // namespace netsr
