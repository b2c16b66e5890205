#include <doctest.h>

#include <map>
#include <stdexcept>

#include "dynred/flow_engine.hpp"
#include "dynred/oracles.hpp"
#include "dynred/rng.hpp"

using namespace dynred;

namespace {

struct Fixture {
    DynGraph graph{true, true};
    NodeId s, t;
    FlowEngine engine;

    explicit Fixture(std::size_t extra_nodes = 0)
        : s((graph.insert_node())), t(graph.insert_node()), engine((allocate(extra_nodes), graph), s, t) {}

    DynGraph& allocate(std::size_t extra) {
        for (std::size_t i = 0; i < extra; ++i) graph.insert_node();
        return graph;
    }

    std::int64_t oracle() {
        std::vector<CapEdge> edges;
        for (const EdgeRec& e : graph.edges()) edges.push_back({e.u, e.v, e.cap});
        return max_flow_oracle(graph.num_nodes(), edges, s, t);
    }

    // capacity bounds and conservation at every non-terminal node
    void check_feasible() {
        std::map<NodeId, std::int64_t> net;
        for (EdgeId e = 0; e < graph.num_edges(); ++e) {
            const EdgeRec& rec = graph.edge(e);
            std::int64_t flow = engine.edge_flow(e);
            CHECK(flow >= 0);
            CHECK(flow <= rec.cap);
            net[rec.u] += flow;
            net[rec.v] -= flow;
        }
        for (const auto& [v, balance] : net) {
            if (v == s || v == t) continue;
            CHECK(balance == 0);
        }
        CHECK(net[s] == engine.value());
    }
};

} // namespace

TEST_CASE("single s->t edge carries its capacity") {
    Fixture f;
    f.engine.insert_edge(f.s, f.t, 5);
    CHECK(f.engine.value() == 5);
    f.check_feasible();
}

TEST_CASE("edges unreachable from s leave the value unchanged") {
    Fixture f(2);
    f.engine.insert_edge(f.s, f.t, 5);
    f.engine.insert_edge(2, 3, 4);
    CHECK(f.engine.value() == 5);
}

TEST_CASE("diamond network reaches the min cut") {
    Fixture f(2); // nodes 2, 3 are the middle layer
    f.engine.insert_edge(f.s, 2, 3);
    f.engine.insert_edge(f.s, 3, 2);
    f.engine.insert_edge(2, f.t, 2);
    f.engine.insert_edge(3, f.t, 3);
    CHECK(f.engine.value() == 4);
    std::uint64_t queries = f.graph.counters().queries;
    CHECK(f.engine.query() == 4);
    CHECK(f.graph.counters().queries == queries + 1);
    f.check_feasible();
}

TEST_CASE("nonpositive capacities are rejected") {
    Fixture f;
    CHECK_THROWS_AS(f.engine.insert_edge(f.s, f.t, 0), std::invalid_argument);
    CHECK_THROWS_AS(f.engine.insert_edge(f.s, f.t, -3), std::invalid_argument);
}

TEST_CASE("oracle equivalence, feasibility and monotonicity on random streams") {
    Rng rng(23);
    for (int stream = 0; stream < 100; ++stream) {
        std::size_t nodes = 4 + rng.uniform(17); // up to 20 nodes
        Fixture f(nodes - 2);
        std::int64_t prev = 0;
        std::size_t inserts = 1 + rng.uniform(50);
        for (std::size_t e = 0; e < inserts; ++e) {
            NodeId u = static_cast<NodeId>(rng.uniform(nodes));
            NodeId v = static_cast<NodeId>(rng.uniform(nodes));
            if (u == v) continue;
            f.engine.insert_edge(u, v, static_cast<std::int64_t>(1 + rng.uniform(16)));
            std::int64_t value = f.engine.value();
            CHECK(value >= prev);
            CHECK(value == f.oracle());
            prev = value;
        }
        f.check_feasible();
    }
}
