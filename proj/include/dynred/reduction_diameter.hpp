#pragma once

#include <cstdint>
#include <vector>

#include "dynred/amortization.hpp"
#include "dynred/dyngraph.hpp"
#include "dynred/instances.hpp"

namespace dynred {

/// The graph H_{gamma,k}(G) for one block of A-colors. B and C are copied
/// from G; each block color i contributes a row of n a-nodes and n t-nodes;
/// the master node u, one skip node per block color and the three connector
/// nodes w1, w2, w3 pin every distance outside the (A_i, T_i) pairs to at
/// most 3, while d(a^i_alpha, t^i_beta) is 3 exactly when the colors
/// (i, alpha, beta) have a triangle in G and 4 otherwise.
struct HGraph {
    double gamma = 1.0;
    std::size_t block_index = 0;
    std::uint32_t n = 0, delta = 0, p = 0;
    std::uint32_t color_begin = 0, color_end = 0; // block colors [begin, end)
    NodeId w1 = 0, w2 = 0, w3 = 0, master = 0;
    std::vector<NodeId> skip;             // one per block color, local index
    std::vector<NodeId> b_nodes, c_nodes; // [(i*delta + j)*p + x]
    std::vector<NodeId> a_rows, t_rows;   // [local*n + i2]
    DynGraph graph{/*directed=*/false, /*capacitated=*/false};

    std::uint32_t width() const { return color_end - color_begin; }
    NodeId b_node(std::uint32_t i, std::uint32_t j, std::uint32_t x) const {
        return b_nodes[(static_cast<std::size_t>(i) * delta + j) * p + x];
    }
    NodeId c_node(std::uint32_t i, std::uint32_t j, std::uint32_t x) const {
        return c_nodes[(static_cast<std::size_t>(i) * delta + j) * p + x];
    }
    NodeId a_node(std::uint32_t local, std::uint32_t i2) const {
        return a_rows[static_cast<std::size_t>(local) * n + i2];
    }
    NodeId t_node(std::uint32_t local, std::uint32_t i2) const {
        return t_rows[static_cast<std::size_t>(local) * n + i2];
    }
};

// Block geometry. Blocks are ceil(n^gamma) colors wide; the division
// remainder is absorbed into the last block so every block spans at least
// two colors whenever n >= 2, which the diameter protocol needs.
std::size_t h_block_width(std::uint32_t n, double gamma);
std::size_t h_num_blocks(std::uint32_t n, double gamma);

/// Builds block k: all nodes allocated first, then every edge inserted one at
/// a time (scaffolding, then B-C edges, then per-color attachment edges).
HGraph build_H(const TcStarInstance& inst, double gamma, std::size_t k);

struct DistanceAuditReport {
    struct Mismatch {
        std::uint32_t i, alpha, beta;
        int expected, got;
    };
    std::vector<Mismatch> mismatches;
    std::int64_t max_distance = 0; // over all node pairs; -1 if disconnected
    std::size_t pairs_checked = 0;
};

/// Checks d(a^i_alpha, t^i_beta) against the triangle truth for every block
/// color and all (alpha, beta); also reports the global distance maximum.
DistanceAuditReport verify_H_distances(const HGraph& h, const TcStarInstance& inst);

/// Builds every block at the given gamma and answers YES iff any block's
/// 3-vs-4 distinguisher reports 4. Requires n >= 2.
bool solve_tcstar_static(const TcStarInstance& inst, double gamma);

struct IncrementalDiameterRun {
    bool answer;
    OpCounters counters;
};

/// Creates H_{1,0}(G) edge-by-edge and queries the distinguisher once at the
/// end. Requires n >= 2.
IncrementalDiameterRun solve_tcstar_incremental(const TcStarInstance& inst);

struct NodeAdditionRun {
    bool answer;
    CreditLedger ledger;
    OpCounters counters;
    std::size_t final_nodes = 0;
    std::size_t nodes_after_base = 0;
};

/// Node-addition protocol with rollback: the base step inserts B, C, the
/// connectors, the master and the skip nodes with their induced edges; each
/// color's phase then adds A_i, T_i and the edges they induce, queries the
/// diameter, and keeps the phase only if its insertion cost beats the
/// amortized credit 2*k*n_hat^alpha. Queries happen before rollback, so the
/// answer matches the oracle regardless of keep decisions. Requires n >= 2.
NodeAdditionRun solve_tcstar_node_addition(const TcStarInstance& inst, double alpha);

/// Root of (2 + a)/(1 + a) * a = 1 in (0, 1), by bisection to 1e-12. Equals
/// (sqrt(5) - 1)/2.
double solve_alpha();

/// Replaces every edge by a path with `interior` fresh nodes, multiplying all
/// original-pair distances by exactly interior + 1.
DynGraph subdivide(const DynGraph& g, std::size_t interior);

} // namespace dynred
