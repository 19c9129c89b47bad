#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "netsr/pagerank.hpp"
#include "oracles.hpp"

using namespace netsr;

TEST_CASE("undirected cycle scores are uniform") {
    Network net(4, false, 4);
    for (NodeId v = 0; v < 4; ++v) net.add_edge(v, (v + 1) % 4);
    auto result = pagerank(net);
    REQUIRE(result.converged);
    for (double s : result.scores) CHECK(s == doctest::Approx(result.scores[0]).epsilon(1e-9));
}

TEST_CASE("a single arc boosts its head") {
    Network net(2, true, 2);
    net.add_edge(0, 1);
    auto result = pagerank(net);
    CHECK(result.scores[1] > result.scores[0]);
    CHECK(result.scores[0] == doctest::Approx((1.0 - 0.85) / 2.0));
}

TEST_CASE("matches the dense oracle on random digraphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        Network net = oracles::random_digraph(20, 0.15, rng);
        for (auto direction : {PageRankDirection::Direct, PageRankDirection::Reverse}) {
            PageRankParams params;
            params.tolerance = 1e-12;
            params.max_iterations = 2000;
            auto got = pagerank(net, params, direction);
            auto want = oracles::dense_pagerank(net, 0.85, direction == PageRankDirection::Reverse);
            REQUIRE(got.scores.size() == want.size());
            for (std::size_t i = 0; i < want.size(); ++i)
                CHECK(std::fabs(got.scores[i] - want[i]) <= 1e-6);
        }
    }
}

TEST_CASE("scores are invariant under node relabeling") {
    Rng rng(7);
    Network net = oracles::random_digraph(15, 0.2, rng);
    std::vector<NodeId> perm(15);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Network relabeled(15, true, net.target_edge_count());
    for (auto [u, v] : net.edges())
        relabeled.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);

    auto a = pagerank(net).scores;
    auto b = pagerank(relabeled).scores;
    for (NodeId v = 0; v < 15; ++v)
        CHECK(a[static_cast<std::size_t>(v)] ==
              doctest::Approx(b[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]).epsilon(1e-6));
}

TEST_CASE("non-convergence is reported, scores stay usable") {
    Rng rng(3);
    Network net = oracles::random_digraph(20, 0.2, rng);
    PageRankParams params;
    params.max_iterations = 1;
    auto result = pagerank(net, params);
    CHECK_FALSE(result.converged);
    CHECK(result.iterations == 1);
    for (double s : result.scores) {
        CHECK(s >= 0.0);
        CHECK(std::isfinite(s));
    }
}

TEST_CASE("undirected networks score both directions identically") {
    Network net(5, false, 4);
    net.add_edge(0, 1);
    net.add_edge(1, 2);
    net.add_edge(2, 3);
    net.add_edge(3, 4);
    auto direct = pagerank(net, {}, PageRankDirection::Direct).scores;
    auto reverse = pagerank(net, {}, PageRankDirection::Reverse).scores;
    CHECK(direct == reverse);
}
