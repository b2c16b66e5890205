#include "dynred/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "dynred/errors.hpp"

namespace dynred {

namespace {

constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

std::uint64_t pack_bc(const TcStarInstance& inst, std::uint32_t bi, std::uint32_t j,
                      std::uint32_t bx, std::uint32_t ci, std::uint32_t cy) {
    std::uint64_t key = bi;
    key = key * inst.delta + j;
    key = key * inst.p + bx;
    key = key * inst.n + ci;
    key = key * inst.p + cy;
    return key;
}

} // namespace

TriangleIndex::TriangleIndex(const TcStarInstance& inst) : inst_(&inst) {
    keys_.reserve(inst.bc.size());
    for (const BcEdge& e : inst.bc)
        keys_.push_back(pack_bc(inst, e.bi, e.bj, e.bx, e.ci, e.cy));
    std::sort(keys_.begin(), keys_.end());
}

bool TriangleIndex::triangle_exists(std::uint32_t i, std::uint32_t alpha,
                                    std::uint32_t beta) const {
    // a triangle must keep the same j across all three nodes
    for (std::uint32_t j = 0; j < inst_->delta; ++j) {
        std::uint32_t x = inst_->ab_at(i, j, alpha);
        std::uint32_t y = inst_->ac_at(i, j, beta);
        std::uint64_t key = pack_bc(*inst_, alpha, j, x, beta, y);
        if (std::binary_search(keys_.begin(), keys_.end(), key)) return true;
    }
    return false;
}

BoolVec oumv_oracle(const OuMvInstance& inst) {
    const std::size_t n = inst.matrix.n;
    BoolVec out(inst.pairs.size(), 0);
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        const auto& [u, v] = inst.pairs[i];
        bool bit = false;
        for (std::size_t j = 0; j < n && !bit; ++j) {
            if (!u[j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (inst.matrix.at(j, k) && v[k]) {
                    bit = true;
                    break;
                }
        }
        out[i] = bit ? 1 : 0;
    }
    return out;
}

bool sat_oracle(const CnfFormula& f, std::uint32_t guard_num_vars) {
    if (f.num_vars > guard_num_vars)
        throw GuardViolation("sat_oracle: " + std::to_string(f.num_vars) +
                             " variables exceeds the desk-scale guard of " +
                             std::to_string(guard_num_vars));
    const std::uint64_t total = 1ULL << f.num_vars;
    for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
        bool all_satisfied = true;
        for (const Clause& clause : f.clauses) {
            bool satisfied = false;
            for (const Literal& lit : clause) {
                bool value = (assignment >> lit.var) & 1;
                if (value == lit.positive) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) {
                all_satisfied = false;
                break;
            }
        }
        if (all_satisfied) return true;
    }
    return false;
}

TripleReport tcstar_oracle(const TcStarInstance& inst, TcStarGuard guard) {
    if (inst.n > guard.n || inst.delta > guard.delta || inst.p > guard.p)
        throw GuardViolation("tcstar_oracle: instance exceeds the desk-scale guard");
    TriangleIndex index(inst);
    TripleReport report;
    for (std::uint32_t i = 0; i < inst.n; ++i)
        for (std::uint32_t alpha = 0; alpha < inst.n; ++alpha)
            for (std::uint32_t beta = 0; beta < inst.n; ++beta)
                if (!index.triangle_exists(i, alpha, beta))
                    report.witnesses.push_back({i, alpha, beta});
    report.answer = !report.witnesses.empty();
    return report;
}

std::size_t max_matching_oracle(const BipartiteGraph& g) {
    if (g.side.size() != g.num_nodes)
        throw std::invalid_argument("max_matching_oracle: side vector size mismatch");
    std::vector<std::vector<NodeId>> adj(g.num_nodes);
    for (const auto& [u, v] : g.edges) {
        if (u >= g.num_nodes || v >= g.num_nodes)
            throw std::invalid_argument("max_matching_oracle: edge endpoint out of range");
        if (g.side[u] == g.side[v])
            throw std::invalid_argument("max_matching_oracle: graph is not bipartite");
        NodeId left = g.side[u] == 0 ? u : v;
        NodeId right = g.side[u] == 0 ? v : u;
        adj[left].push_back(right);
    }

    std::vector<NodeId> match(g.num_nodes, kNone);
    std::vector<std::uint32_t> visited(g.num_nodes, 0);
    std::uint32_t stamp = 0;

    // Kuhn's algorithm: DFS augment from every unmatched left node, repeated
    // until no augmenting path remains.
    auto try_kuhn = [&](auto&& self, NodeId left) -> bool {
        for (NodeId right : adj[left]) {
            if (visited[right] == stamp) continue;
            visited[right] = stamp;
            if (match[right] == kNone || self(self, match[right])) {
                match[right] = left;
                match[left] = right;
                return true;
            }
        }
        return false;
    };

    std::size_t size = 0;
    for (NodeId v = 0; v < g.num_nodes; ++v) {
        if (g.side[v] != 0 || match[v] != kNone) continue;
        ++stamp;
        if (try_kuhn(try_kuhn, v)) ++size;
    }
    return size;
}

std::int64_t max_flow_oracle(std::size_t num_nodes, const std::vector<CapEdge>& edges,
                             NodeId s, NodeId t) {
    if (s == t) throw std::invalid_argument("max_flow_oracle: s == t");
    if (s >= num_nodes || t >= num_nodes)
        throw std::invalid_argument("max_flow_oracle: terminal out of range");

    struct Arc {
        NodeId to;
        std::int64_t residual;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<std::uint32_t>> adj(num_nodes);
    for (const CapEdge& e : edges) {
        if (e.cap < 0) throw std::invalid_argument("max_flow_oracle: negative capacity");
        if (e.u >= num_nodes || e.v >= num_nodes)
            throw std::invalid_argument("max_flow_oracle: edge endpoint out of range");
        adj[e.u].push_back(static_cast<std::uint32_t>(arcs.size()));
        arcs.push_back({e.v, e.cap});
        adj[e.v].push_back(static_cast<std::uint32_t>(arcs.size()));
        arcs.push_back({e.u, 0});
    }

    std::int64_t value = 0;
    std::vector<std::int64_t> parent_arc(num_nodes);
    for (;;) {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[s] = -2;
        std::queue<NodeId> q;
        q.push(s);
        while (!q.empty() && parent_arc[t] == -1) {
            NodeId u = q.front();
            q.pop();
            for (std::uint32_t a : adj[u]) {
                if (arcs[a].residual <= 0 || parent_arc[arcs[a].to] != -1) continue;
                parent_arc[arcs[a].to] = a;
                q.push(arcs[a].to);
            }
        }
        if (parent_arc[t] == -1) break;
        std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
        for (NodeId v = t; v != s;) {
            std::uint32_t a = static_cast<std::uint32_t>(parent_arc[v]);
            bottleneck = std::min(bottleneck, arcs[a].residual);
            v = arcs[a ^ 1].to;
        }
        for (NodeId v = t; v != s;) {
            std::uint32_t a = static_cast<std::uint32_t>(parent_arc[v]);
            arcs[a].residual -= bottleneck;
            arcs[a ^ 1].residual += bottleneck;
            v = arcs[a ^ 1].to;
        }
        value += bottleneck;
    }
    return value;
}

ApspResult apsp_bfs_oracle(std::size_t num_nodes,
                           const std::vector<std::pair<NodeId, NodeId>>& undirected_edges) {
    std::vector<std::vector<NodeId>> adj(num_nodes);
    for (const auto& [u, v] : undirected_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    ApspResult result;
    result.dist.assign(num_nodes, std::vector<int>(num_nodes, -1));
    for (NodeId src = 0; src < num_nodes; ++src) {
        auto& dist = result.dist[src];
        dist[src] = 0;
        std::deque<NodeId> q{src};
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop_front();
            for (NodeId v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        for (NodeId v = 0; v < num_nodes; ++v) {
            if (dist[v] < 0)
                result.connected = false;
            else
                result.diameter = std::max<std::int64_t>(result.diameter, dist[v]);
        }
    }
    return result;
}

} // namespace dynred
