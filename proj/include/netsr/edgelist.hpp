#pragma once

#include <iosfwd>
#include <string>

#include "netsr/network.hpp"

namespace netsr {

/// Text edge lists: optional `# nodes=<N> directed=<0|1>` header, then one
/// `<u> <v>` pair per line. `#` lines are comments. Edges keep insertion
/// order so growth history survives a round trip. Without a header the node
/// count is max id + 1 and the network is undirected.
Network read_edge_list(std::istream& in);
Network read_edge_list_file(const std::string& path);

void write_edge_list(const Network& net, std::ostream& out);
void write_edge_list_file(const Network& net, const std::string& path);

/// Snapshot file name: base path plus `.xi<ratio>` (two decimals).
std::string snapshot_path(const std::string& base, double ratio);

}  // namespace netsr
