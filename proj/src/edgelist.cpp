#include "netsr/edgelist.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace netsr {

namespace {

bool parse_header(const std::string& line, NodeId& nodes, bool& directed) {
    NodeId n = 0;
    int d = 0;
    if (std::sscanf(line.c_str(), "# nodes=%d directed=%d", &n, &d) == 2) {
        nodes = n;
        directed = d != 0;
        return true;
    }
    return false;
}

}  // namespace

Network read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::pair<NodeId, NodeId>> pairs;
    NodeId declared_nodes = -1;
    bool directed = false;
    bool saw_header = false;
    NodeId max_id = -1;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!saw_header && parse_header(line, declared_nodes, directed)) saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        long long u = -1, v = -1;
        if (!(ls >> u >> v))
            throw InputError("bad edge on line " + std::to_string(line_no) + ": " + line);
        std::string rest;
        if (ls >> rest)
            throw InputError("trailing tokens on line " + std::to_string(line_no) + ": " + line);
        if (u < 0 || v < 0)
            throw InputError("negative node id on line " + std::to_string(line_no));
        pairs.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        max_id = std::max({max_id, static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }

    NodeId nodes = saw_header ? declared_nodes : max_id + 1;
    if (nodes < 1) throw InputError("edge list declares no nodes");
    std::int64_t target = std::max<std::int64_t>(1, static_cast<std::int64_t>(pairs.size()));
    Network net(nodes, directed, std::min(target, Network::pair_capacity(nodes, directed)));
    for (const auto& [u, v] : pairs) net.add_edge(u, v);
    return net;
}

Network read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open edge list: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Network& net, std::ostream& out) {
    out << "# nodes=" << net.node_count() << " directed=" << (net.directed() ? 1 : 0) << "\n";
    for (const auto& [u, v] : net.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write edge list: " + path);
    write_edge_list(net, out);
}

std::string snapshot_path(const std::string& base, double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ".xi%.2f", ratio);
    return base + buf;
}

}  // namespace netsr
