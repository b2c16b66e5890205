#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dynred/dyngraph.hpp"
#include "dynred/instances.hpp"

namespace dynred {

// Independent brute-force reference solvers. They deliberately recompute from
// scratch with the naive textbook algorithm, structurally different from the
// incremental engines, so agreement between the two is meaningful evidence.

struct TripleReport {
    bool answer = false;                // YES iff some color triple has no triangle
    std::vector<ColorTriple> witnesses; // the triangle-free triples
};

struct TcStarGuard {
    std::uint32_t n = 16, delta = 4, p = 4;
};

// Lookup of the instance's bc edge set keyed by full coordinates; shared by
// the TC* oracle and the distance-dichotomy verifier.
class TriangleIndex {
public:
    explicit TriangleIndex(const TcStarInstance& inst);

    // A triangle with colors (i, alpha, beta) exists iff for some j the bc
    // edge joining b^alpha_{j, ab(i,j,alpha)} and c^beta_{j, ac(i,j,beta)}
    // is present.
    bool triangle_exists(std::uint32_t i, std::uint32_t alpha, std::uint32_t beta) const;

private:
    const TcStarInstance* inst_;
    std::vector<std::uint64_t> keys_; // sorted packed bc coordinates
};

// bit i = OR over (j,k) of u^i_j & M_{jk} & v^i_k
BoolVec oumv_oracle(const OuMvInstance& inst);

// Exhaustive assignment enumeration; guarded to desk scale.
bool sat_oracle(const CnfFormula& f, std::uint32_t guard_num_vars = 24);

TripleReport tcstar_oracle(const TcStarInstance& inst, TcStarGuard guard = {});

struct BipartiteGraph {
    std::size_t num_nodes = 0;
    std::vector<std::uint8_t> side; // 0 = left, 1 = right, one entry per node
    std::vector<std::pair<NodeId, NodeId>> edges;
};

// Maximum-cardinality matching by repeated augmenting-path search from
// scratch. Rejects edges that do not cross the declared bipartition.
std::size_t max_matching_oracle(const BipartiteGraph& g);

struct CapEdge {
    NodeId u, v;
    std::int64_t cap;
};

// Shortest-augmenting-path max flow recomputed from scratch.
std::int64_t max_flow_oracle(std::size_t num_nodes, const std::vector<CapEdge>& edges,
                             NodeId s, NodeId t);

struct ApspResult {
    std::vector<std::vector<int>> dist; // -1 marks unreachable pairs
    bool connected = true;
    std::int64_t diameter = 0; // max finite distance; meaningful when connected
};

ApspResult apsp_bfs_oracle(std::size_t num_nodes,
                           const std::vector<std::pair<NodeId, NodeId>>& undirected_edges);

} // namespace dynred
