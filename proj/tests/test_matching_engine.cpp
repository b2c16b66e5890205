#include <doctest.h>

#include <stdexcept>

#include "dynred/matching_engine.hpp"
#include "dynred/oracles.hpp"
#include "dynred/rng.hpp"

using namespace dynred;

namespace {

struct Fixture {
    DynGraph graph{false, false};
    MatchingEngine engine{graph};
    std::vector<std::uint8_t> sides;

    NodeId add(Side s) {
        sides.push_back(static_cast<std::uint8_t>(s));
        return engine.add_node(s);
    }

    std::size_t oracle() const {
        BipartiteGraph g;
        g.num_nodes = graph.num_nodes();
        g.side = sides;
        for (const EdgeRec& e : graph.edges()) g.edges.emplace_back(e.u, e.v);
        return max_matching_oracle(g);
    }
};

} // namespace

TEST_CASE("first edge into an empty matching gives size 1") {
    Fixture f;
    NodeId u = f.add(Side::Left);
    NodeId v = f.add(Side::Right);
    CHECK(f.engine.insert_edge(u, v) == 1);
    CHECK(f.engine.partner(u) == v);
}

TEST_CASE("same-side endpoints are rejected") {
    Fixture f;
    NodeId u = f.add(Side::Left);
    NodeId v = f.add(Side::Left);
    CHECK_THROWS_AS(f.engine.insert_edge(u, v), std::invalid_argument);
}

TEST_CASE("edge between matched nodes without an augmenting path keeps the size") {
    Fixture f;
    NodeId l0 = f.add(Side::Left), l1 = f.add(Side::Left), l2 = f.add(Side::Left);
    NodeId r0 = f.add(Side::Right), r1 = f.add(Side::Right);
    f.add(Side::Right);
    f.engine.insert_edge(l0, r0);
    f.engine.insert_edge(l1, r1);
    CHECK(f.engine.current_size() == 2);
    CHECK(f.engine.insert_edge(l0, r1) == 2); // both matched, no augmenting path
    CHECK(f.engine.current_size() == f.oracle());
    (void)l2;
}

TEST_CASE("edge between matched nodes with an augmenting path through it grows the matching") {
    // l3-r1, l1-r1, l2-r2, l2-r3 reach size 2; inserting l1-r2 opens the
    // alternating path l3, r1, l1, r2, l2, r3 through the new edge.
    Fixture f;
    NodeId l1 = f.add(Side::Left), l2 = f.add(Side::Left), l3 = f.add(Side::Left);
    NodeId r1 = f.add(Side::Right), r2 = f.add(Side::Right), r3 = f.add(Side::Right);
    f.engine.insert_edge(l1, r1);
    f.engine.insert_edge(l2, r2);
    f.engine.insert_edge(l3, r1);
    f.engine.insert_edge(l2, r3);
    CHECK(f.engine.current_size() == 2);
    CHECK(f.engine.partner(l1) == r1);
    CHECK(f.engine.partner(l2) == r2);
    CHECK(f.engine.insert_edge(l1, r2) == 3);
    CHECK(f.engine.current_size() == f.oracle());
}

TEST_CASE("k disjoint edges give size k and query_size counts queries") {
    Fixture f;
    for (int i = 0; i < 5; ++i) {
        NodeId u = f.add(Side::Left);
        NodeId v = f.add(Side::Right);
        f.engine.insert_edge(u, v);
    }
    std::uint64_t before = f.graph.counters().queries;
    CHECK(f.engine.query_size() == 5);
    CHECK(f.graph.counters().queries == before + 1);
}

TEST_CASE("oracle equivalence, monotonicity and 0/1 deltas on random streams") {
    Rng rng(17);
    for (int stream = 0; stream < 100; ++stream) {
        Fixture f;
        std::size_t left = 1 + rng.uniform(15);
        std::size_t right = 1 + rng.uniform(15);
        std::vector<NodeId> ls, rs;
        for (std::size_t i = 0; i < left; ++i) ls.push_back(f.add(Side::Left));
        for (std::size_t i = 0; i < right; ++i) rs.push_back(f.add(Side::Right));
        std::size_t prev = 0;
        std::size_t inserts = 1 + rng.uniform(60);
        for (std::size_t e = 0; e < inserts; ++e) {
            NodeId u = ls[rng.uniform(left)];
            NodeId v = rs[rng.uniform(right)];
            std::size_t size = f.engine.insert_edge(u, v);
            CHECK(size >= prev);
            CHECK(size - prev <= 1);
            CHECK(size == f.oracle()); // also: no growth means no augmenting path
            prev = size;
        }
    }
}
