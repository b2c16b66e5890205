#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dynred/dyngraph.hpp"
#include "dynred/flow_engine.hpp"
#include "dynred/instances.hpp"
#include "dynred/oracles.hpp"

namespace dynred {

struct FlowPhaseResult {
    std::int64_t value;
    bool satisfiable_hint; // value < i*N means the formula is satisfiable
};

/// The SAT-to-incremental-max-flow gadget. Variables split into halves; one
/// node per assignment of each half (N = 2^{num_vars/2} per side) plus one
/// node per clause. Edge (a, c) with capacity N exists iff the partial
/// assignment a does NOT satisfy clause c; (c, b) with capacity 1 iff b does
/// not satisfy c; every (b, t) has capacity 1. Phases are 1-based so the
/// threshold test "flow < i*N" reads literally.
class FlowGadget {
public:
    explicit FlowGadget(const CnfFormula& f, std::uint32_t guard_num_vars = 20);
    FlowGadget(const FlowGadget&) = delete;
    FlowGadget& operator=(const FlowGadget&) = delete;

    /// One phase: add (s, a_i) with capacity N, query the flow, then add the
    /// shortcut (a_i, t) with capacity N. Advances the phase counter.
    FlowPhaseResult run_phase();

    std::int64_t big_n() const { return n_cap_; }
    std::size_t phase() const { return next_phase_; } // next phase, 1-based
    const CnfFormula& formula() const { return formula_; }
    DynGraph& graph() { return graph_; }
    FlowEngine& engine() { return *engine_; }
    NodeId s() const { return s_; }
    NodeId t() const { return t_; }
    NodeId a_node(std::uint64_t assignment) const { return a_nodes_[assignment]; }
    NodeId b_node(std::uint64_t assignment) const { return b_nodes_[assignment]; }
    NodeId clause_node(std::size_t c) const { return clause_nodes_[c]; }

    // Does the given half-assignment satisfy the clause? `first_half` selects
    // variables [0, num_vars/2) versus [num_vars/2, num_vars).
    bool half_satisfies(std::uint64_t assignment, const Clause& clause, bool first_half) const;

private:
    CnfFormula formula_;
    std::int64_t n_cap_ = 0; // N = 2^{num_vars/2}
    DynGraph graph_;
    NodeId s_ = 0, t_ = 0;
    std::vector<NodeId> a_nodes_, b_nodes_, clause_nodes_;
    std::unique_ptr<FlowEngine> engine_; // bound after the nodes exist
    std::size_t next_phase_ = 1;
};

FlowGadget build_flow_base(const CnfFormula& f, std::uint32_t guard_num_vars = 20);

/// Runs the phase protocol and decides satisfiability by the flow-threshold
/// law. With early_exit the run stops at the first firing phase; both modes
/// return the same boolean, equal to the SAT oracle.
bool solve_sat_via_flow(const CnfFormula& f, bool early_exit = false,
                        std::uint32_t guard_num_vars = 20);

struct FlowRunTrace {
    std::vector<std::int64_t> phase_values;
    bool answer = false;
};

FlowRunTrace solve_sat_via_flow_trace(const CnfFormula& f, bool early_exit = false,
                                      std::uint32_t guard_num_vars = 20);

struct DecrementalFlowRun {
    // Values in execution order (deleting in reverse insertion order and
    // recomputing at mirrored query positions): the incremental phase values
    // reversed.
    std::vector<std::int64_t> values;
    bool answer = false;
    OpCounters counters;
};

DecrementalFlowRun solve_sat_via_flow_decremental(const CnfFormula& f,
                                                  std::uint32_t guard_num_vars = 20);

struct StFlowReduction {
    DynGraph graph; // directed, capacitated
    NodeId s, t;
};

/// Textbook bipartite-matching-to-directed-st-flow bridge: unit capacities
/// s -> L, L -> R (original edges oriented left to right), R -> t. The max
/// flow of the output equals the maximum matching of the input.
StFlowReduction matching_to_st_flow(const BipartiteGraph& g);

} // namespace dynred
