#include <doctest.h>

#include "dynred/diameter_engine.hpp"
#include "dynred/errors.hpp"
#include "dynred/oracles.hpp"
#include "dynred/rng.hpp"

using namespace dynred;

namespace {

DynGraph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    DynGraph g(false, false);
    for (std::size_t i = 0; i < n; ++i) g.insert_node();
    for (const auto& [u, v] : edges) g.insert_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("exact diameter on small named graphs") {
    DynGraph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(exact_diameter(k4).value == 1);

    DynGraph path = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    DiameterAnswer answer = exact_diameter(path);
    CHECK_FALSE(answer.infinite);
    CHECK(answer.value == 4);
    CHECK(answer.method == DiameterAnswer::Method::Exact);

    DynGraph split = make_graph(4, {{0, 1}, {2, 3}});
    CHECK(exact_diameter(split).infinite);

    DynGraph lone = make_graph(1, {});
    CHECK(exact_diameter(lone).value == 0);
}

TEST_CASE("exact diameter counts one query and charges BFS work") {
    DynGraph path = make_graph(3, {{0, 1}, {1, 2}});
    OpCounters before = path.counters();
    (void)exact_diameter(path);
    CHECK(path.counters().queries == before.queries + 1);
    CHECK(path.counters().elementary_steps > before.elementary_steps);
}

TEST_CASE("distinguish_3_4 separates the two cases and enforces its contract") {
    // star with a pendant path: diameter 3
    DynGraph star = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}});
    CHECK(distinguish_3_4(star) == 3);

    DynGraph cycle8 =
        make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    CHECK(distinguish_3_4(cycle8) == 4);

    DynGraph edge = make_graph(2, {{0, 1}});
    CHECK_THROWS_AS(distinguish_3_4(edge), GuardViolation);
    DynGraph split = make_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(distinguish_3_4(split), GuardViolation);
}

TEST_CASE("a plugged-in better-than-4/3 approximation also separates 3 from 4") {
    // 0.76 * true value stays above 3 exactly when the truth is 4
    DiameterApproximation approx = [](DynGraph& g) {
        return 0.76 * static_cast<double>(exact_diameter(g).value);
    };
    DynGraph star = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}});
    CHECK(distinguish_3_4(star, approx) == 3);
    DynGraph cycle8 =
        make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    CHECK(distinguish_3_4(cycle8, approx) == 4);
}

TEST_CASE("exact diameter equals the APSP oracle on random graphs") {
    Rng rng(31);
    for (int round = 0; round < 1000; ++round) {
        std::size_t n = 2 + rng.uniform(199); // up to 200 nodes
        std::vector<std::pair<NodeId, NodeId>> edges;
        std::size_t m = rng.uniform(3 * n);
        for (std::size_t e = 0; e < m; ++e) {
            NodeId u = static_cast<NodeId>(rng.uniform(n));
            NodeId v = static_cast<NodeId>(rng.uniform(n));
            if (u != v) edges.emplace_back(u, v);
        }
        DynGraph g = make_graph(n, edges);
        DiameterAnswer answer = exact_diameter(g);
        ApspResult oracle = apsp_bfs_oracle(n, edges);
        CHECK(answer.infinite == !oracle.connected);
        if (!answer.infinite) CHECK(answer.value == oracle.diameter);
    }
}
