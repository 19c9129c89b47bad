#pragma once

#include <vector>

#include "netsr/network.hpp"

namespace netsr {

struct PageRankParams {
    double alpha = 0.85;
    double beta = -1.0;  // < 0 means (1 - alpha) / N
    double tolerance = 1e-8;
    int max_iterations = 200;
};

enum class PageRankDirection { Direct, Reverse };

struct PageRankResult {
    std::vector<double> scores;
    bool converged = false;
    int iterations = 0;
};

/// Power iteration with dangling nodes treated as having out-degree 1.
/// Reverse direction scores the transposed network; undirected networks
/// treat every edge as bidirectional, so Direct == Reverse.
PageRankResult pagerank(const Network& net, const PageRankParams& params = {},
                        PageRankDirection direction = PageRankDirection::Direct);

}  // namespace netsr
