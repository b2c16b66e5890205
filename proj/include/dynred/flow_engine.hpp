#pragma once

#include <cstdint>
#include <vector>

#include "dynred/dyngraph.hpp"

namespace dynred {

/// Incremental st-maximum-flow on a directed integer-capacitated graph.
///
/// Insertions only ever add capacity, so the previous flow stays feasible;
/// after each insertion the engine re-augments with repeated shortest
/// (BFS) residual paths until none remains, restoring maximality.
class FlowEngine {
public:
    // Capacities and values stay far below this bound so sums cannot wrap.
    static constexpr std::int64_t kMaxCapacity = 1LL << 40;

    FlowEngine(DynGraph& g, NodeId s, NodeId t);

    /// Insert a directed edge with positive capacity and re-augment.
    EdgeId insert_edge(NodeId u, NodeId v, std::int64_t cap);

    /// Current maximum flow value; counted as a query, O(1) elementary steps.
    std::int64_t query();

    std::int64_t value() const { return value_; }
    std::int64_t edge_flow(EdgeId e) const { return arcs_[2 * e + 1].residual; }
    NodeId source() const { return s_; }
    NodeId sink() const { return t_; }
    DynGraph& graph() { return g_; }

private:
    struct Arc {
        NodeId to;
        std::int64_t residual;
    };

    std::int64_t augment_once();
    void sync_nodes();

    DynGraph& g_;
    NodeId s_, t_;
    std::vector<Arc> arcs_; // forward arc 2e, reverse arc 2e+1
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::int64_t> parent_arc_;
    std::int64_t value_ = 0;
};

} // namespace dynred
