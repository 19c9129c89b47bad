#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "netsr/network.hpp"

namespace netsr {

inline constexpr std::array<const char*, 16> kDirectedTriadNames = {
    "003", "012", "102", "021D", "021U", "021C", "111D", "111U",
    "030T", "030C", "201", "120D", "120U", "120C", "210", "300"};

inline constexpr std::array<const char*, 4> kUndirectedTriadNames = {
    "empty", "edge", "path", "triangle"};

struct TriadCensus {
    bool directed = false;
    std::vector<std::int64_t> counts;  // 16 classes directed, 4 undirected
    std::int64_t total() const;
};

/// Counts of three-node subgraph isomorphism classes. Directed networks use
/// the 16 standard classes, undirected ones the 4 edge-count classes. The
/// counts always sum to C(N,3). Requires N >= 3.
TriadCensus triad_census(const Network& net);

}  // namespace netsr
