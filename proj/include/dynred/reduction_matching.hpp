#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dynred/dyngraph.hpp"
#include "dynred/instances.hpp"
#include "dynred/matching_engine.hpp"

namespace dynred {

struct MatchPhaseOutcome {
    std::size_t queried_size;
    int bit; // 1 iff queried_size == 4n + 2i + 1
};

/// The matching gadget: six families S, A, B, C, D, T of n (left, right) node
/// pairs. The base graph carries the pair edges of A, B, C, D plus the edge
/// (b^r_i, c^l_j) for every M_ij = 1, giving a maximum matching of exactly 4n.
/// Each phase wires one online vector pair into the gadget and reads the
/// answer bit off the queried matching size.
class MatchGadget {
public:
    struct Family {
        std::vector<NodeId> left, right;
    };

    explicit MatchGadget(const BitMatrix& m);
    MatchGadget(const MatchGadget&) = delete;
    MatchGadget& operator=(const MatchGadget&) = delete;

    /// Phase steps, in order: u-edges (a^r_i, b^l_j) for u_j = 1 ascending j;
    /// v-edges (c^r_j, d^l_i); the edges (s^r_i, a^l_i) and (d^r_i, t^l_i);
    /// one size query; then (s^l_i, s^r_i) and (t^l_i, t^r_i). The bit is
    /// decided by the exact size formula, not by "size increased".
    MatchPhaseOutcome run_phase(const BoolVec& u, const BoolVec& v);

    std::size_t n() const { return n_; }
    std::size_t phase() const { return phase_; }
    DynGraph& graph() { return graph_; }
    MatchingEngine& engine() { return engine_; }
    const Family& s() const { return s_; }
    const Family& a() const { return a_; }
    const Family& b() const { return b_; }
    const Family& c() const { return c_; }
    const Family& d() const { return d_; }
    const Family& t() const { return t_; }

private:
    void insert_checked(NodeId u, NodeId v);
    Family make_family();

    std::size_t n_;
    std::size_t phase_ = 0;
    DynGraph graph_;
    MatchingEngine engine_;
    Family s_, a_, b_, c_, d_, t_;
    std::unordered_set<std::uint64_t> present_edges_;
};

MatchGadget build_match_base(const BitMatrix& m);

/// Runs all n phases in arrival order; the result equals the OuMv oracle.
std::vector<int> solve_oumv_via_matching(const OuMvInstance& inst);

// Exact number of edge insertions a full run performs:
// 4n + |M| + sum_i (|u_i| + |v_i| + 4).
std::uint64_t matching_insertion_count(const OuMvInstance& inst);

struct DecrementalMatchingRun {
    // Bits in execution order: the run deletes edges in reverse insertion
    // order and queries at the mirrored positions, so this is the incremental
    // bit sequence reversed.
    std::vector<int> bits;
    std::size_t deletions_applied = 0;
    OpCounters counters; // incremental build plus the mirrored queries
};

DecrementalMatchingRun solve_oumv_via_matching_decremental(const OuMvInstance& inst);

} // namespace dynred
