#include "dynred/reduction_matching.hpp"

#include <stdexcept>
#include <string>

#include "dynred/oracles.hpp"

namespace dynred {

MatchGadget::Family MatchGadget::make_family() {
    Family f;
    f.left.reserve(n_);
    f.right.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        f.left.push_back(engine_.add_node(Side::Left));
        f.right.push_back(engine_.add_node(Side::Right));
    }
    return f;
}

MatchGadget::MatchGadget(const BitMatrix& m)
    : n_(m.n), graph_(/*directed=*/false, /*capacitated=*/false), engine_(graph_) {
    s_ = make_family();
    a_ = make_family();
    b_ = make_family();
    c_ = make_family();
    d_ = make_family();
    t_ = make_family();
    for (const Family* fam : {&a_, &b_, &c_, &d_})
        for (std::size_t i = 0; i < n_; ++i) insert_checked(fam->left[i], fam->right[i]);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (m.at(i, j)) insert_checked(b_.right[i], c_.left[j]);
}

void MatchGadget::insert_checked(NodeId u, NodeId v) {
    NodeId lo = u < v ? u : v;
    NodeId hi = u < v ? v : u;
    std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    if (!present_edges_.insert(key).second)
        throw std::logic_error("MatchGadget: duplicate edge insertion");
    engine_.insert_edge(u, v);
}

MatchPhaseOutcome MatchGadget::run_phase(const BoolVec& u, const BoolVec& v) {
    if (phase_ >= n_) throw std::invalid_argument("MatchGadget: phases exhausted");
    if (u.size() != n_ || v.size() != n_)
        throw std::invalid_argument("MatchGadget: vector length mismatch");
    const std::size_t i = phase_;
    if (engine_.current_size() != 4 * n_ + 2 * i)
        throw std::logic_error("MatchGadget: pre-phase matching size is not 4n+2i");

    for (std::size_t j = 0; j < n_; ++j)
        if (u[j]) insert_checked(a_.right[i], b_.left[j]);
    for (std::size_t j = 0; j < n_; ++j)
        if (v[j]) insert_checked(c_.right[j], d_.left[i]);
    insert_checked(s_.right[i], a_.left[i]);
    insert_checked(d_.right[i], t_.left[i]);

    std::size_t size = engine_.query_size();
    MatchPhaseOutcome outcome{size, size == 4 * n_ + 2 * i + 1 ? 1 : 0};

    insert_checked(s_.left[i], s_.right[i]);
    insert_checked(t_.left[i], t_.right[i]);
    ++phase_;
    return outcome;
}

MatchGadget build_match_base(const BitMatrix& m) { return MatchGadget(m); }

std::vector<int> solve_oumv_via_matching(const OuMvInstance& inst) {
    MatchGadget gadget(inst.matrix);
    std::vector<int> bits;
    bits.reserve(inst.pairs.size());
    for (const auto& [u, v] : inst.pairs) bits.push_back(gadget.run_phase(u, v).bit);
    return bits;
}

std::uint64_t matching_insertion_count(const OuMvInstance& inst) {
    const std::uint64_t n = inst.matrix.n;
    std::uint64_t total = 4 * n + inst.matrix.popcount();
    for (const auto& [u, v] : inst.pairs) {
        for (auto bit : u) total += bit ? 1 : 0;
        for (auto bit : v) total += bit ? 1 : 0;
        total += 4;
    }
    return total;
}

DecrementalMatchingRun solve_oumv_via_matching_decremental(const OuMvInstance& inst) {
    const std::size_t n = inst.matrix.n;
    MatchGadget gadget(inst.matrix);

    // Incremental pass, remembering the log position of every query.
    std::vector<std::size_t> query_points;
    query_points.reserve(n);
    for (const auto& [u, v] : inst.pairs) {
        (void)gadget.run_phase(u, v);
        // the query happened before the two step-5 insertions
        query_points.push_back(gadget.graph().log_size() - 2);
    }

    // Sides survive deletions, so snapshot them once.
    std::vector<std::uint8_t> sides(gadget.graph().num_nodes());
    for (NodeId x = 0; x < sides.size(); ++x)
        sides[x] = static_cast<std::uint8_t>(gadget.engine().side(x));

    auto scratch_size = [&](DynGraph& g) {
        BipartiteGraph bip;
        bip.num_nodes = g.num_nodes();
        bip.side.assign(sides.begin(), sides.begin() + static_cast<long>(g.num_nodes()));
        bip.edges.reserve(g.num_edges());
        for (const EdgeRec& e : g.edges()) bip.edges.emplace_back(e.u, e.v);
        return max_matching_oracle(bip);
    };

    // Decremental pass: delete in reverse insertion order, recomputing the
    // matching from scratch whenever the graph reaches a mirrored query state.
    DecrementalMatchingRun run;
    std::vector<LogEntry> schedule = gadget.graph().reverse_replay();
    DynGraph& g = gadget.graph();
    std::size_t next_query = n; // walk query_points from the back
    for (std::size_t step = 0; step < schedule.size(); ++step) {
        g.rollback(1);
        ++run.deletions_applied;
        while (next_query > 0 && g.log_size() == query_points[next_query - 1]) {
            --next_query;
            g.count_query();
            std::size_t size = scratch_size(g);
            run.bits.push_back(size == 4 * n + 2 * next_query + 1 ? 1 : 0);
        }
    }
    run.counters = g.counters();
    return run;
}

} // namespace dynred
