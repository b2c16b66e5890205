#include "dynred/reduction_flow.hpp"

#include <stdexcept>
#include <string>

#include "dynred/errors.hpp"

namespace dynred {

FlowGadget::FlowGadget(const CnfFormula& f, std::uint32_t guard_num_vars)
    : formula_(f), graph_(/*directed=*/true, /*capacitated=*/true) {
    if (f.num_vars < 2 || f.num_vars % 2 != 0)
        throw std::invalid_argument("FlowGadget: num_vars must be even and >= 2");
    if (f.num_vars > guard_num_vars)
        throw GuardViolation("FlowGadget: " + std::to_string(f.num_vars) +
                             " variables exceeds the desk-scale guard of " +
                             std::to_string(guard_num_vars));
    n_cap_ = 1LL << (f.num_vars / 2);

    s_ = graph_.insert_node();
    t_ = graph_.insert_node();
    a_nodes_.reserve(static_cast<std::size_t>(n_cap_));
    b_nodes_.reserve(static_cast<std::size_t>(n_cap_));
    for (std::int64_t i = 0; i < n_cap_; ++i) a_nodes_.push_back(graph_.insert_node());
    for (std::int64_t i = 0; i < n_cap_; ++i) b_nodes_.push_back(graph_.insert_node());
    for (std::size_t c = 0; c < formula_.clauses.size(); ++c)
        clause_nodes_.push_back(graph_.insert_node());
    engine_ = std::make_unique<FlowEngine>(graph_, s_, t_);

    for (std::size_t c = 0; c < formula_.clauses.size(); ++c) {
        const Clause& clause = formula_.clauses[c];
        for (std::int64_t a = 0; a < n_cap_; ++a)
            if (!half_satisfies(static_cast<std::uint64_t>(a), clause, true))
                engine_->insert_edge(a_nodes_[a], clause_nodes_[c], n_cap_);
        for (std::int64_t b = 0; b < n_cap_; ++b)
            if (!half_satisfies(static_cast<std::uint64_t>(b), clause, false))
                engine_->insert_edge(clause_nodes_[c], b_nodes_[b], 1);
    }
    for (std::int64_t b = 0; b < n_cap_; ++b) engine_->insert_edge(b_nodes_[b], t_, 1);
}

bool FlowGadget::half_satisfies(std::uint64_t assignment, const Clause& clause,
                                bool first_half) const {
    const std::uint32_t half = formula_.num_vars / 2;
    for (const Literal& lit : clause) {
        bool in_first = lit.var < half;
        if (in_first != first_half) continue;
        std::uint32_t offset = in_first ? lit.var : lit.var - half;
        bool value = (assignment >> offset) & 1;
        if (value == lit.positive) return true;
    }
    return false;
}

FlowPhaseResult FlowGadget::run_phase() {
    if (next_phase_ > static_cast<std::size_t>(n_cap_))
        throw std::invalid_argument("FlowGadget: phases exhausted");
    const std::size_t i = next_phase_;
    if (engine_->value() != static_cast<std::int64_t>(i - 1) * n_cap_)
        throw std::logic_error("FlowGadget: pre-phase flow value is not (i-1)*N");

    engine_->insert_edge(s_, a_nodes_[i - 1], n_cap_);
    std::int64_t value = engine_->query();
    engine_->insert_edge(a_nodes_[i - 1], t_, n_cap_);
    ++next_phase_;
    return {value, value < static_cast<std::int64_t>(i) * n_cap_};
}

FlowGadget build_flow_base(const CnfFormula& f, std::uint32_t guard_num_vars) {
    return FlowGadget(f, guard_num_vars);
}

FlowRunTrace solve_sat_via_flow_trace(const CnfFormula& f, bool early_exit,
                                      std::uint32_t guard_num_vars) {
    FlowGadget gadget(f, guard_num_vars);
    FlowRunTrace trace;
    for (std::int64_t i = 0; i < gadget.big_n(); ++i) {
        FlowPhaseResult r = gadget.run_phase();
        trace.phase_values.push_back(r.value);
        if (r.satisfiable_hint) {
            trace.answer = true;
            if (early_exit) break;
        }
    }
    return trace;
}

bool solve_sat_via_flow(const CnfFormula& f, bool early_exit, std::uint32_t guard_num_vars) {
    return solve_sat_via_flow_trace(f, early_exit, guard_num_vars).answer;
}

DecrementalFlowRun solve_sat_via_flow_decremental(const CnfFormula& f,
                                                  std::uint32_t guard_num_vars) {
    FlowGadget gadget(f, guard_num_vars);
    std::vector<std::size_t> query_points;
    for (std::int64_t i = 0; i < gadget.big_n(); ++i) {
        (void)gadget.run_phase();
        // the query sat between the phase's two insertions
        query_points.push_back(gadget.graph().log_size() - 1);
    }

    DynGraph& g = gadget.graph();
    auto scratch_value = [&](DynGraph& graph) {
        std::vector<CapEdge> edges;
        edges.reserve(graph.num_edges());
        for (const EdgeRec& e : graph.edges()) edges.push_back({e.u, e.v, e.cap});
        return max_flow_oracle(graph.num_nodes(), edges, gadget.s(), gadget.t());
    };

    DecrementalFlowRun run;
    std::vector<LogEntry> schedule = g.reverse_replay();
    std::size_t next_query = query_points.size();
    for (std::size_t step = 0; step < schedule.size(); ++step) {
        g.rollback(1);
        while (next_query > 0 && g.log_size() == query_points[next_query - 1]) {
            --next_query;
            g.count_query();
            std::int64_t value = scratch_value(g);
            run.values.push_back(value);
            if (value < static_cast<std::int64_t>(next_query + 1) * gadget.big_n())
                run.answer = true;
        }
    }
    run.counters = g.counters();
    return run;
}

StFlowReduction matching_to_st_flow(const BipartiteGraph& g) {
    if (g.side.size() != g.num_nodes)
        throw std::invalid_argument("matching_to_st_flow: side vector size mismatch");
    StFlowReduction out{DynGraph(/*directed=*/true, /*capacitated=*/true), 0, 0};
    for (std::size_t v = 0; v < g.num_nodes; ++v) out.graph.insert_node();
    out.s = out.graph.insert_node();
    out.t = out.graph.insert_node();
    for (std::size_t v = 0; v < g.num_nodes; ++v) {
        if (g.side[v] == 0)
            out.graph.insert_edge(out.s, static_cast<NodeId>(v), 1);
        else
            out.graph.insert_edge(static_cast<NodeId>(v), out.t, 1);
    }
    for (const auto& [u, v] : g.edges) {
        if (g.side[u] == g.side[v])
            throw std::invalid_argument("matching_to_st_flow: graph is not bipartite");
        NodeId left = g.side[u] == 0 ? u : v;
        NodeId right = g.side[u] == 0 ? v : u;
        out.graph.insert_edge(left, right, 1);
    }
    return out;
}

} // namespace dynred
