#include "dynred/reduction_diameter.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "dynred/diameter_engine.hpp"
#include "dynred/errors.hpp"
#include "dynred/oracles.hpp"

namespace dynred {

namespace {

// Audit-only BFS; charges nothing.
std::vector<int> bfs_distances(const DynGraph& g, NodeId src) {
    std::vector<int> dist(g.num_nodes(), -1);
    dist[src] = 0;
    std::deque<NodeId> queue{src};
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (const auto& [v, edge_id] : g.neighbors(u)) {
            (void)edge_id;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

void require_drivable(const TcStarInstance& inst) {
    if (inst.n < 2)
        throw GuardViolation(
            "diameter drivers need n >= 2 (a single-color block has no sibling "
            "skip node and the 3-vs-4 dichotomy degenerates)");
}

} // namespace

std::size_t h_block_width(std::uint32_t n, double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("h_block_width: gamma must lie in (0, 1]");
    double w = std::pow(static_cast<double>(n), gamma);
    auto width = static_cast<std::size_t>(std::ceil(w - 1e-9));
    return std::max<std::size_t>(1, std::min<std::size_t>(width, n));
}

std::size_t h_num_blocks(std::uint32_t n, double gamma) {
    return std::max<std::size_t>(1, n / h_block_width(n, gamma));
}

HGraph build_H(const TcStarInstance& inst, double gamma, std::size_t k) {
    const std::size_t width = h_block_width(inst.n, gamma);
    const std::size_t blocks = h_num_blocks(inst.n, gamma);
    if (k >= blocks)
        throw std::invalid_argument("build_H: block index " + std::to_string(k) +
                                    " out of range (have " + std::to_string(blocks) +
                                    " blocks)");
    HGraph h;
    h.gamma = gamma;
    h.block_index = k;
    h.n = inst.n;
    h.delta = inst.delta;
    h.p = inst.p;
    h.color_begin = static_cast<std::uint32_t>(k * width);
    h.color_end = (k + 1 == blocks) ? inst.n : static_cast<std::uint32_t>((k + 1) * width);

    DynGraph& g = h.graph;
    const std::size_t bc_count = static_cast<std::size_t>(inst.n) * inst.delta * inst.p;
    h.b_nodes.reserve(bc_count);
    h.c_nodes.reserve(bc_count);
    for (std::size_t x = 0; x < bc_count; ++x) h.b_nodes.push_back(g.insert_node());
    for (std::size_t x = 0; x < bc_count; ++x) h.c_nodes.push_back(g.insert_node());
    h.w1 = g.insert_node();
    h.w2 = g.insert_node();
    h.w3 = g.insert_node();
    h.master = g.insert_node();
    for (std::uint32_t local = 0; local < h.width(); ++local) h.skip.push_back(g.insert_node());
    for (std::uint32_t local = 0; local < h.width(); ++local)
        for (std::uint32_t i2 = 0; i2 < inst.n; ++i2) h.a_rows.push_back(g.insert_node());
    for (std::uint32_t local = 0; local < h.width(); ++local)
        for (std::uint32_t i2 = 0; i2 < inst.n; ++i2) h.t_rows.push_back(g.insert_node());

    // scaffolding
    g.insert_edge(h.w1, h.w2);
    g.insert_edge(h.w2, h.w3);
    g.insert_edge(h.w2, h.master);
    for (NodeId v : h.skip) g.insert_edge(h.master, v);
    for (NodeId b : h.b_nodes) g.insert_edge(h.w2, b);
    for (NodeId c : h.c_nodes) g.insert_edge(h.w2, c);
    for (NodeId a : h.a_rows) g.insert_edge(h.w1, a);
    for (NodeId t : h.t_rows) g.insert_edge(h.w3, t);
    for (std::uint32_t local = 0; local < h.width(); ++local) {
        for (std::uint32_t i2 = 0; i2 < inst.n; ++i2)
            g.insert_edge(h.skip[local], h.a_node(local, i2));
        for (std::uint32_t other = 0; other < h.width(); ++other) {
            if (other == local) continue;
            for (std::uint32_t i2 = 0; i2 < inst.n; ++i2)
                g.insert_edge(h.skip[local], h.t_node(other, i2));
        }
    }

    // B-C edges copied from G
    for (const BcEdge& e : inst.bc)
        g.insert_edge(h.b_node(e.bi, e.bj, e.bx), h.c_node(e.ci, e.cj, e.cy));

    // per-color attachment edges
    for (std::uint32_t local = 0; local < h.width(); ++local) {
        std::uint32_t color = h.color_begin + local;
        for (std::uint32_t i2 = 0; i2 < inst.n; ++i2)
            for (std::uint32_t j = 0; j < inst.delta; ++j)
                g.insert_edge(h.a_node(local, i2), h.b_node(i2, j, inst.ab_at(color, j, i2)));
        for (std::uint32_t i2 = 0; i2 < inst.n; ++i2)
            for (std::uint32_t j = 0; j < inst.delta; ++j)
                g.insert_edge(h.c_node(i2, j, inst.ac_at(color, j, i2)), h.t_node(local, i2));
    }
    return h;
}

DistanceAuditReport verify_H_distances(const HGraph& h, const TcStarInstance& inst) {
    TriangleIndex index(inst);
    DistanceAuditReport report;
    for (std::uint32_t local = 0; local < h.width(); ++local) {
        std::uint32_t color = h.color_begin + local;
        for (std::uint32_t alpha = 0; alpha < inst.n; ++alpha) {
            std::vector<int> dist = bfs_distances(h.graph, h.a_node(local, alpha));
            for (std::uint32_t beta = 0; beta < inst.n; ++beta) {
                int expected = index.triangle_exists(color, alpha, beta) ? 3 : 4;
                int got = dist[h.t_node(local, beta)];
                ++report.pairs_checked;
                if (got != expected)
                    report.mismatches.push_back({color, alpha, beta, expected, got});
            }
        }
    }
    for (NodeId src = 0; src < h.graph.num_nodes(); ++src) {
        std::vector<int> dist = bfs_distances(h.graph, src);
        for (int d : dist) {
            if (d < 0) {
                report.max_distance = -1;
                return report;
            }
            report.max_distance = std::max<std::int64_t>(report.max_distance, d);
        }
    }
    return report;
}

bool solve_tcstar_static(const TcStarInstance& inst, double gamma) {
    require_drivable(inst);
    const std::size_t blocks = h_num_blocks(inst.n, gamma);
    bool any_four = false;
    for (std::size_t k = 0; k < blocks; ++k) {
        HGraph h = build_H(inst, gamma, k);
        if (distinguish_3_4(h.graph) == 4) any_four = true;
    }
    return any_four;
}

IncrementalDiameterRun solve_tcstar_incremental(const TcStarInstance& inst) {
    require_drivable(inst);
    HGraph h = build_H(inst, 1.0, 0);
    bool answer = distinguish_3_4(h.graph) == 4;
    return {answer, h.graph.counters()};
}

NodeAdditionRun solve_tcstar_node_addition(const TcStarInstance& inst, double alpha) {
    require_drivable(inst);
    CreditLedger ledger(alpha);
    DynGraph g(/*directed=*/false, /*capacitated=*/false);
    const std::uint32_t n = inst.n;

    // base step: B, C, connectors, master and every skip node, plus all the
    // edges these nodes induce in H_{1,0}(G)
    const std::size_t bc_count = static_cast<std::size_t>(n) * inst.delta * inst.p;
    std::vector<NodeId> b_nodes, c_nodes;
    for (std::size_t x = 0; x < bc_count; ++x) b_nodes.push_back(g.insert_node());
    for (std::size_t x = 0; x < bc_count; ++x) c_nodes.push_back(g.insert_node());
    NodeId w1 = g.insert_node();
    NodeId w2 = g.insert_node();
    NodeId w3 = g.insert_node();
    NodeId master = g.insert_node();
    std::vector<NodeId> skip;
    for (std::uint32_t i = 0; i < n; ++i) skip.push_back(g.insert_node());

    auto b_at = [&](std::uint32_t i, std::uint32_t j, std::uint32_t x) {
        return b_nodes[(static_cast<std::size_t>(i) * inst.delta + j) * inst.p + x];
    };
    auto c_at = [&](std::uint32_t i, std::uint32_t j, std::uint32_t x) {
        return c_nodes[(static_cast<std::size_t>(i) * inst.delta + j) * inst.p + x];
    };

    g.insert_edge(w1, w2);
    g.insert_edge(w2, w3);
    g.insert_edge(w2, master);
    for (NodeId v : skip) g.insert_edge(master, v);
    for (NodeId b : b_nodes) g.insert_edge(w2, b);
    for (NodeId c : c_nodes) g.insert_edge(w2, c);
    for (const BcEdge& e : inst.bc)
        g.insert_edge(b_at(e.bi, e.bj, e.bx), c_at(e.ci, e.cj, e.cy));

    NodeAdditionRun run{false, std::move(ledger), OpCounters{}, 0, g.num_nodes()};

    // rows of kept phases, indexed by color; empty = not in the graph
    std::vector<std::vector<NodeId>> kept_t(n);

    for (std::uint32_t color = 0; color < n; ++color) {
        const std::uint64_t n_hat = g.num_nodes(); // sampled at phase start
        const std::size_t log_start = g.log_size();
        const std::uint64_t steps_start = g.counters().elementary_steps;

        std::vector<NodeId> a_row, t_row;
        for (std::uint32_t i2 = 0; i2 < n; ++i2) a_row.push_back(g.insert_node());
        for (std::uint32_t i2 = 0; i2 < n; ++i2) t_row.push_back(g.insert_node());

        for (NodeId a : a_row) g.insert_edge(w1, a);
        for (NodeId a : a_row) g.insert_edge(skip[color], a);
        for (std::uint32_t i2 = 0; i2 < n; ++i2)
            for (std::uint32_t j = 0; j < inst.delta; ++j)
                g.insert_edge(a_row[i2], b_at(i2, j, inst.ab_at(color, j, i2)));

        for (NodeId t : t_row) g.insert_edge(w3, t);
        // every other skip node reaches the new row...
        for (std::uint32_t other = 0; other < n; ++other) {
            if (other == color) continue;
            for (NodeId t : t_row) g.insert_edge(skip[other], t);
        }
        // ...and this color's skip node reaches the rows already kept
        for (std::uint32_t other = 0; other < n; ++other) {
            if (other == color) continue;
            for (NodeId t : kept_t[other]) g.insert_edge(skip[color], t);
        }
        for (std::uint32_t i2 = 0; i2 < n; ++i2)
            for (std::uint32_t j = 0; j < inst.delta; ++j)
                g.insert_edge(c_at(i2, j, inst.ac_at(color, j, i2)), t_row[i2]);

        const std::uint64_t cost = g.counters().elementary_steps - steps_start;
        const std::uint64_t k = g.log_size() - log_start;

        // query before the keep/rollback decision
        if (distinguish_3_4(g) == 4) run.answer = true;

        if (run.ledger.record_phase(k, n_hat, cost)) {
            kept_t[color] = std::move(t_row);
        } else {
            g.rollback(g.log_size() - log_start);
        }
    }
    run.counters = g.counters();
    run.final_nodes = g.num_nodes();
    return run;
}

double solve_alpha() {
    auto f = [](double a) { return (2.0 + a) / (1.0 + a) * a - 1.0; };
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-14; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

DynGraph subdivide(const DynGraph& g, std::size_t interior) {
    if (g.directed() || g.capacitated())
        throw std::invalid_argument("subdivide: expects an undirected unweighted graph");
    DynGraph out(/*directed=*/false, /*capacitated=*/false);
    for (std::size_t v = 0; v < g.num_nodes(); ++v) out.insert_node();
    for (const EdgeRec& e : g.edges()) {
        if (interior == 0) {
            out.insert_edge(e.u, e.v);
            continue;
        }
        NodeId prev = e.u;
        for (std::size_t i = 0; i < interior; ++i) {
            NodeId mid = out.insert_node();
            out.insert_edge(prev, mid);
            prev = mid;
        }
        out.insert_edge(prev, e.v);
    }
    return out;
}

} // namespace dynred
