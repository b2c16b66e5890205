#include <doctest.h>

#include <set>

#include "dynred/errors.hpp"
#include "dynred/oracles.hpp"
#include "dynred/reduction_flow.hpp"
#include "dynred/rng.hpp"

using namespace dynred;

namespace {

CnfFormula formula(std::uint32_t vars, std::vector<Clause> clauses) {
    CnfFormula f;
    f.num_vars = vars;
    f.clauses = std::move(clauses);
    return f;
}

} // namespace

TEST_CASE("base gadget of the empty formula") {
    CnfFormula f = formula(2, {});
    FlowGadget gadget(f);
    CHECK(gadget.big_n() == 2);
    CHECK(gadget.graph().num_nodes() == 2 * 2 + 0 + 2);
    CHECK(gadget.graph().num_edges() == 2); // only the (b, t) edges
    CHECK(gadget.engine().value() == 0);
}

TEST_CASE("clause edges follow non-satisfaction exactly") {
    // (x0) and (not x0) over vars {0} + {1}
    CnfFormula f = formula(2, {{{0, true}}, {{0, false}}});
    FlowGadget gadget(f);
    std::set<std::pair<NodeId, NodeId>> edges;
    for (const EdgeRec& e : gadget.graph().edges()) edges.insert({e.u, e.v});
    // assignment a=0 falsifies (x0); a=1 falsifies (not x0)
    CHECK(edges.count({gadget.a_node(0), gadget.clause_node(0)}) == 1);
    CHECK(edges.count({gadget.a_node(1), gadget.clause_node(0)}) == 0);
    CHECK(edges.count({gadget.a_node(0), gadget.clause_node(1)}) == 0);
    CHECK(edges.count({gadget.a_node(1), gadget.clause_node(1)}) == 1);
    // no clause mentions the B half, so every b falsifies both clauses
    for (std::uint64_t b = 0; b < 2; ++b) {
        CHECK(edges.count({gadget.clause_node(0), gadget.b_node(b)}) == 1);
        CHECK(edges.count({gadget.clause_node(1), gadget.b_node(b)}) == 1);
    }
}

TEST_CASE("edge presence audit on a random 8-var 3-CNF") {
    CnfFormula f = gen_cnf(8, 20, 3, 6);
    FlowGadget gadget(f);
    std::set<std::pair<NodeId, NodeId>> edges;
    for (const EdgeRec& e : gadget.graph().edges()) edges.insert({e.u, e.v});
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (std::uint64_t a = 0; a < 16; ++a) {
            bool satisfies = gadget.half_satisfies(a, f.clauses[c], true);
            CHECK(edges.count({gadget.a_node(a), gadget.clause_node(c)}) ==
                  (satisfies ? 0u : 1u));
            bool b_satisfies = gadget.half_satisfies(a, f.clauses[c], false);
            CHECK(edges.count({gadget.clause_node(c), gadget.b_node(a)}) ==
                  (b_satisfies ? 0u : 1u));
        }
}

TEST_CASE("guard rejects oversized formulas") {
    CnfFormula f = formula(22, {});
    CHECK_THROWS_AS(FlowGadget{f}, GuardViolation);
    CHECK_THROWS_AS(FlowGadget(formula(3, {}), 20), std::invalid_argument);
}

TEST_CASE("empty formula fires the hint in phase 1") {
    FlowGadget gadget(formula(2, {}));
    FlowPhaseResult r = gadget.run_phase();
    CHECK(r.value == 0);
    CHECK(r.satisfiable_hint);
}

TEST_CASE("unsatisfiable formula saturates every phase") {
    // (x0)(not x0)(x1)(not x1) over a 2+2 split
    CnfFormula f = formula(4, {{{0, true}}, {{0, false}}, {{1, true}}, {{1, false}}});
    REQUIRE_FALSE(sat_oracle(f));
    FlowGadget gadget(f);
    const std::int64_t big_n = gadget.big_n();
    for (std::int64_t i = 1; i <= big_n; ++i) {
        CHECK(gadget.engine().value() == (i - 1) * big_n); // pre-phase law
        FlowPhaseResult r = gadget.run_phase();
        CHECK(r.value == i * big_n);
        CHECK_FALSE(r.satisfiable_hint);
    }
}

TEST_CASE("satisfiable formula dips below the threshold in some phase") {
    CnfFormula f = formula(2, {{{0, true}, {1, true}}, {{0, false}, {1, false}}});
    REQUIRE(sat_oracle(f));
    CHECK(solve_sat_via_flow(f));
}

TEST_CASE("phase value equals (i-1)N plus the reachable-b count") {
    Rng rng(9);
    for (int round = 0; round < 15; ++round) {
        std::uint32_t vars = 4 + 2 * static_cast<std::uint32_t>(rng.uniform(4));
        CnfFormula f = gen_cnf(vars, 2 + rng.uniform(3 * vars), 3, rng.next_u64());
        FlowGadget gadget(f);
        const std::int64_t big_n = gadget.big_n();
        std::int64_t prev = -1;
        for (std::int64_t i = 1; i <= big_n; ++i) {
            FlowPhaseResult r = gadget.run_phase();
            std::int64_t reachable = 0;
            for (std::int64_t b = 0; b < big_n; ++b) {
                bool hit = false;
                for (const Clause& clause : f.clauses)
                    if (!gadget.half_satisfies(static_cast<std::uint64_t>(i - 1), clause, true) &&
                        !gadget.half_satisfies(static_cast<std::uint64_t>(b), clause, false)) {
                        hit = true;
                        break;
                    }
                if (hit) ++reachable;
            }
            CHECK(r.value == (i - 1) * big_n + reachable);
            CHECK(r.satisfiable_hint == (reachable < big_n));
            CHECK(r.value >= prev); // monotone phases
            prev = r.value;
        }
    }
}

TEST_CASE("solve agrees with the SAT oracle, with and without early exit") {
    Rng rng(33);
    for (int round = 0; round < 30; ++round) {
        std::uint32_t vars = 4 + 2 * static_cast<std::uint32_t>(rng.uniform(4));
        CnfFormula f = gen_cnf(vars, 2 + rng.uniform(4 * vars - 1), 3, rng.next_u64());
        bool expected = sat_oracle(f);
        CHECK(solve_sat_via_flow(f, false) == expected);
        CHECK(solve_sat_via_flow(f, true) == expected);
    }
}

TEST_CASE("queries equal N when all phases run") {
    CnfFormula f = gen_cnf(6, 10, 3, 2);
    FlowGadget gadget(f);
    for (std::int64_t i = 0; i < gadget.big_n(); ++i) (void)gadget.run_phase();
    CHECK(gadget.graph().counters().queries == static_cast<std::uint64_t>(gadget.big_n()));
    CHECK_THROWS_AS(gadget.run_phase(), std::invalid_argument); // phases exhausted
}

TEST_CASE("decremental flow run mirrors the incremental phase values") {
    Rng rng(51);
    for (int round = 0; round < 5; ++round) {
        CnfFormula f = gen_cnf(6, 2 + rng.uniform(20), 3, rng.next_u64());
        FlowRunTrace forward = solve_sat_via_flow_trace(f, false);
        DecrementalFlowRun back = solve_sat_via_flow_decremental(f);
        REQUIRE(back.values.size() == forward.phase_values.size());
        for (std::size_t i = 0; i < back.values.size(); ++i)
            CHECK(back.values[i] == forward.phase_values[forward.phase_values.size() - 1 - i]);
        CHECK(back.answer == forward.answer);
        CHECK(back.answer == sat_oracle(f));
    }
}

TEST_CASE("matching_to_st_flow preserves the optimum") {
    BipartiteGraph empty;
    StFlowReduction red = matching_to_st_flow(empty);
    std::vector<CapEdge> edges;
    for (const EdgeRec& e : red.graph.edges()) edges.push_back({e.u, e.v, e.cap});
    CHECK(max_flow_oracle(red.graph.num_nodes(), edges, red.s, red.t) == 0);

    BipartiteGraph disjoint; // k independent edges carry k units
    disjoint.num_nodes = 8;
    disjoint.side = {0, 0, 0, 0, 1, 1, 1, 1};
    disjoint.edges = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
    StFlowReduction dred = matching_to_st_flow(disjoint);
    edges.clear();
    for (const EdgeRec& e : dred.graph.edges()) edges.push_back({e.u, e.v, e.cap});
    CHECK(max_flow_oracle(dred.graph.num_nodes(), edges, dred.s, dred.t) == 4);

    Rng rng(61);
    for (int round = 0; round < 100; ++round) {
        BipartiteGraph g;
        std::size_t left = 1 + rng.uniform(12);
        std::size_t right = 1 + rng.uniform(12);
        g.num_nodes = left + right;
        g.side.assign(g.num_nodes, 0);
        for (std::size_t v = left; v < g.num_nodes; ++v) g.side[v] = 1;
        std::size_t m = rng.uniform(3 * (left + right));
        for (std::size_t e = 0; e < m; ++e)
            g.edges.emplace_back(static_cast<NodeId>(rng.uniform(left)),
                                 static_cast<NodeId>(left + rng.uniform(right)));
        StFlowReduction r = matching_to_st_flow(g);
        std::vector<CapEdge> cap_edges;
        for (const EdgeRec& e : r.graph.edges()) cap_edges.push_back({e.u, e.v, e.cap});
        CHECK(max_flow_oracle(r.graph.num_nodes(), cap_edges, r.s, r.t) ==
              static_cast<std::int64_t>(max_matching_oracle(g)));
    }
}
