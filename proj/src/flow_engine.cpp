#include "dynred/flow_engine.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace dynred {

FlowEngine::FlowEngine(DynGraph& g, NodeId s, NodeId t) : g_(g), s_(s), t_(t) {
    if (!g_.directed() || !g_.capacitated())
        throw std::invalid_argument("FlowEngine: graph must be directed and capacitated");
    if (s == t) throw std::invalid_argument("FlowEngine: s == t");
    if (s >= g_.num_nodes() || t >= g_.num_nodes())
        throw std::out_of_range("FlowEngine: unknown terminal handle");
    if (g_.num_edges() != 0)
        throw std::invalid_argument("FlowEngine: graph must start without edges");
    sync_nodes();
}

void FlowEngine::sync_nodes() {
    adj_.resize(g_.num_nodes());
    parent_arc_.resize(g_.num_nodes());
}

EdgeId FlowEngine::insert_edge(NodeId u, NodeId v, std::int64_t cap) {
    if (cap <= 0) throw std::invalid_argument("FlowEngine: capacity must be positive");
    if (cap > kMaxCapacity) throw std::invalid_argument("FlowEngine: capacity too large");
    EdgeId id = g_.insert_edge(u, v, cap);
    sync_nodes();
    adj_[u].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({v, cap});
    adj_[v].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({u, 0});
    while (augment_once() > 0) {
    }
    return id;
}

std::int64_t FlowEngine::augment_once() {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
    parent_arc_[s_] = -2;
    std::queue<NodeId> q;
    q.push(s_);
    while (!q.empty() && parent_arc_[t_] == -1) {
        NodeId u = q.front();
        q.pop();
        for (std::uint32_t a : adj_[u]) {
            g_.add_steps(1);
            if (arcs_[a].residual <= 0 || parent_arc_[arcs_[a].to] != -1) continue;
            parent_arc_[arcs_[a].to] = a;
            q.push(arcs_[a].to);
        }
    }
    if (parent_arc_[t_] == -1) return 0;
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (NodeId v = t_; v != s_;) {
        std::uint32_t a = static_cast<std::uint32_t>(parent_arc_[v]);
        bottleneck = std::min(bottleneck, arcs_[a].residual);
        v = arcs_[a ^ 1].to;
    }
    for (NodeId v = t_; v != s_;) {
        std::uint32_t a = static_cast<std::uint32_t>(parent_arc_[v]);
        arcs_[a].residual -= bottleneck;
        arcs_[a ^ 1].residual += bottleneck;
        g_.add_steps(1);
        v = arcs_[a ^ 1].to;
    }
    value_ += bottleneck;
    if (value_ > kMaxCapacity * 2)
        throw std::overflow_error("FlowEngine: flow value outside the checked range");
    return bottleneck;
}

std::int64_t FlowEngine::query() {
    g_.count_query();
    return value_;
}

} // namespace dynred
