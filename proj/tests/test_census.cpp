#include <doctest.h>

#include "netsr/census.hpp"
#include "oracles.hpp"

using namespace netsr;

namespace {
std::int64_t choose3(std::int64_t n) { return n * (n - 1) * (n - 2) / 6; }
}

TEST_CASE("empty directed triple is class 003") {
    Network net(3, true, 6);
    auto census = triad_census(net);
    REQUIRE(census.counts.size() == 16);
    CHECK(census.counts[0] == 1);
    CHECK(census.total() == 1);
}

TEST_CASE("complete mutual triple is class 300") {
    Network net(3, true, 6);
    for (NodeId u = 0; u < 3; ++u)
        for (NodeId v = 0; v < 3; ++v)
            if (u != v) net.add_edge(u, v);
    auto census = triad_census(net);
    CHECK(census.counts[15] == 1);
    CHECK(census.total() == 1);
}

TEST_CASE("small network requires three nodes") {
    Network net(2, true, 2);
    CHECK_THROWS_AS(triad_census(net), InputError);
}

TEST_CASE("directed census matches triple enumeration on random digraphs") {
    oracles::TriadOracle oracle;
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        NodeId n = static_cast<NodeId>(5 + rand_index(rng, 26));  // 5..30
        double density = 0.1 + 0.4 * rand_unit(rng);
        Network net = oracles::random_digraph(n, density, rng);
        auto fast = triad_census(net);
        auto slow = oracle.census(net);
        CHECK(fast.counts == slow);
        CHECK(fast.total() == choose3(n));
    }
}

TEST_CASE("undirected classes count edges in the triple") {
    Network tri(3, false, 3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    auto census = triad_census(tri);
    REQUIRE(census.counts.size() == 4);
    CHECK(census.counts == std::vector<std::int64_t>{0, 0, 0, 1});

    Network path(4, false, 2);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto pc = triad_census(path);
    // triples: {0,1,2} path, {0,1,3} edge, {1,2,3} edge, {0,2,3} empty
    CHECK(pc.counts == std::vector<std::int64_t>{1, 2, 1, 0});
}

TEST_CASE("undirected census matches enumeration on random networks") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        NodeId n = static_cast<NodeId>(5 + rand_index(rng, 16));
        Network net(n, false, Network::pair_capacity(n, false));
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (rand_unit(rng) < 0.3) net.add_edge(u, v);
        auto fast = triad_census(net);

        std::vector<std::int64_t> slow(4, 0);
        for (NodeId a = 0; a < n; ++a)
            for (NodeId b = a + 1; b < n; ++b)
                for (NodeId c = b + 1; c < n; ++c) {
                    int edges = (net.has_arc(a, b) ? 1 : 0) + (net.has_arc(b, c) ? 1 : 0) +
                                (net.has_arc(a, c) ? 1 : 0);
                    ++slow[static_cast<std::size_t>(edges)];
                }
        CHECK(fast.counts == slow);
        CHECK(fast.total() == choose3(n));
    }
}
