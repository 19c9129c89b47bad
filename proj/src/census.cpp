#include "netsr/census.hpp"

#include <algorithm>
#include <numeric>

namespace netsr {

namespace {

// Class of each 6-bit arc pattern over an ordered triple (v, u, w), bits:
// v->u:1, u->v:2, v->w:4, w->v:8, u->w:16, w->u:32. Values are 1-based
// indices into kDirectedTriadNames.
constexpr int kTriCodes[64] = {
    1,  2,  2,  3,  2,  4,  6,  8,  2,  6,  5,  7,  3,  8,  7,  11,
    2,  6,  4,  8,  5,  9,  9,  13, 6,  10, 9,  14, 7,  14, 12, 15,
    2,  5,  6,  7,  6,  9,  10, 14, 4,  9,  9,  12, 8,  13, 14, 15,
    3,  7,  8,  11, 7,  12, 14, 15, 8,  14, 13, 15, 11, 15, 15, 16};

std::int64_t choose3(std::int64_t n) { return n * (n - 1) * (n - 2) / 6; }

std::vector<std::vector<NodeId>> merged_neighborhoods(const Network& net) {
    const NodeId n = net.node_count();
    std::vector<std::vector<NodeId>> nbrs(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) {
        auto& list = nbrs[static_cast<std::size_t>(v)];
        for (NodeId w : net.out_neighbors(v)) list.push_back(w);
        if (net.directed())
            for (NodeId w : net.in_neighbors(v)) list.push_back(w);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return nbrs;
}

TriadCensus directed_census(const Network& net) {
    const NodeId n = net.node_count();
    auto nbrs = merged_neighborhoods(net);
    std::vector<std::int64_t> counts(16, 0);

    auto code = [&](NodeId v, NodeId u, NodeId w) {
        int c = 0;
        if (net.has_arc(v, u)) c |= 1;
        if (net.has_arc(u, v)) c |= 2;
        if (net.has_arc(v, w)) c |= 4;
        if (net.has_arc(w, v)) c |= 8;
        if (net.has_arc(u, w)) c |= 16;
        if (net.has_arc(w, u)) c |= 32;
        return c;
    };

    std::vector<NodeId> joint;
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId u : nbrs[static_cast<std::size_t>(v)]) {
            if (u <= v) continue;
            joint.clear();
            std::set_union(nbrs[static_cast<std::size_t>(v)].begin(), nbrs[static_cast<std::size_t>(v)].end(),
                           nbrs[static_cast<std::size_t>(u)].begin(), nbrs[static_cast<std::size_t>(u)].end(),
                           std::back_inserter(joint));
            // joint always contains u and v themselves, so the count of
            // third nodes adjacent to neither endpoint is n - |joint|
            std::int64_t unrelated = n - static_cast<std::int64_t>(joint.size());
            bool mutual = net.has_arc(v, u) && net.has_arc(u, v);
            counts[mutual ? 2 : 1] += unrelated;
            for (NodeId w : joint) {
                if (w == v || w == u) continue;
                bool adjacent_vw = net.has_arc(v, w) || net.has_arc(w, v);
                if (u < w || (v < w && w < u && !adjacent_vw))
                    counts[kTriCodes[code(v, u, w)] - 1] += 1;
            }
        }
    }
    std::int64_t connected = std::accumulate(counts.begin() + 1, counts.end(), std::int64_t{0});
    counts[0] = choose3(n) - connected;
    return TriadCensus{true, std::move(counts)};
}

TriadCensus undirected_census(const Network& net) {
    const NodeId n = net.node_count();
    auto nbrs = merged_neighborhoods(net);
    const std::int64_t m = net.edge_count();

    std::int64_t wedges = 0;
    for (NodeId v = 0; v < n; ++v) {
        std::int64_t k = net.degree(v);
        wedges += k * (k - 1) / 2;
    }
    std::int64_t triangles3 = 0;  // each triangle counted once per edge
    std::vector<NodeId> common;
    for (const auto& [u, v] : net.edges()) {
        common.clear();
        std::set_intersection(nbrs[static_cast<std::size_t>(u)].begin(), nbrs[static_cast<std::size_t>(u)].end(),
                              nbrs[static_cast<std::size_t>(v)].begin(), nbrs[static_cast<std::size_t>(v)].end(),
                              std::back_inserter(common));
        triangles3 += static_cast<std::int64_t>(common.size());
    }
    std::int64_t triangles = triangles3 / 3;
    std::int64_t paths = wedges - 3 * triangles;
    std::int64_t one_edge = m * (n - 2) - 2 * paths - 3 * triangles;
    std::int64_t empty = choose3(n) - one_edge - paths - triangles;
    return TriadCensus{false, {empty, one_edge, paths, triangles}};
}

}  // namespace

std::int64_t TriadCensus::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

TriadCensus triad_census(const Network& net) {
    if (net.node_count() < 3) throw InputError("triad census requires at least 3 nodes");
    return net.directed() ? directed_census(net) : undirected_census(net);
}

}  // namespace netsr
