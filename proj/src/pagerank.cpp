#include "netsr/pagerank.hpp"

#include <cmath>

namespace netsr {

PageRankResult pagerank(const Network& net, const PageRankParams& params,
                        PageRankDirection direction) {
    const NodeId n = net.node_count();
    const double beta = params.beta >= 0 ? params.beta : (1.0 - params.alpha) / static_cast<double>(n);
    const bool reverse = direction == PageRankDirection::Reverse && net.directed();

    // out-degree of the walked orientation, floored at 1 for dangling nodes
    std::vector<double> inv_out(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) {
        std::int64_t k = net.directed()
                             ? net.degree(v, reverse ? DegreeKind::In : DegreeKind::Out)
                             : net.degree(v);
        inv_out[static_cast<std::size_t>(v)] = 1.0 / static_cast<double>(k > 0 ? k : 1);
    }

    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
    std::vector<double> next(static_cast<std::size_t>(n));
    PageRankResult result;
    for (int it = 0; it < params.max_iterations; ++it) {
        std::fill(next.begin(), next.end(), beta);
        for (const auto& [u, v] : net.edges()) {
            const auto su = static_cast<std::size_t>(u);
            const auto sv = static_cast<std::size_t>(v);
            if (!net.directed()) {
                next[sv] += params.alpha * x[su] * inv_out[su];
                next[su] += params.alpha * x[sv] * inv_out[sv];
            } else if (reverse) {
                next[su] += params.alpha * x[sv] * inv_out[sv];
            } else {
                next[sv] += params.alpha * x[su] * inv_out[su];
            }
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            delta = std::max(delta, std::fabs(next[i] - x[i]));
        x.swap(next);
        result.iterations = it + 1;
        if (delta < params.tolerance) {
            result.converged = true;
            break;
        }
    }
    result.scores = std::move(x);
    return result;
}

}  // namespace netsr
