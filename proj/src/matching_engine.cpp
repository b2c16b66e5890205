#include "dynred/matching_engine.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dynred {

MatchingEngine::MatchingEngine(DynGraph& g) : g_(g) {
    if (g_.directed()) throw std::invalid_argument("MatchingEngine: graph must be undirected");
    if (g_.num_nodes() != 0)
        throw std::invalid_argument("MatchingEngine: graph must start empty");
}

NodeId MatchingEngine::add_node(Side side) {
    NodeId v = g_.insert_node();
    side_.push_back(static_cast<std::uint8_t>(side));
    partner_.push_back(kNone);
    parent_.push_back(kNone);
    seen_.push_back(0);
    return v;
}

std::optional<NodeId> MatchingEngine::partner(NodeId v) const {
    if (partner_[v] == kNone) return std::nullopt;
    return partner_[v];
}

std::size_t MatchingEngine::insert_edge(NodeId u, NodeId v) {
    if (u >= side_.size() || v >= side_.size())
        throw std::out_of_range("MatchingEngine: unknown node handle");
    if (side_[u] == side_[v])
        throw std::invalid_argument("MatchingEngine: endpoints on the same side");
    g_.insert_edge(u, v);

    if (partner_[u] == kNone && partner_[v] == kNone) {
        // the new edge itself is an augmenting path
        partner_[u] = v;
        partner_[v] = u;
        ++size_;
        g_.add_steps(1);
        return size_;
    }
    if (partner_[u] == kNone) {
        augment_from({u});
    } else if (partner_[v] == kNone) {
        augment_from({v});
    } else {
        // Both endpoints matched. An augmenting path can still run through the
        // new edge with a free vertex on each far side, so search from every
        // free left vertex (lowest handle first).
        std::vector<NodeId> starts;
        for (NodeId x = 0; x < side_.size(); ++x)
            if (side_[x] == static_cast<std::uint8_t>(Side::Left) && partner_[x] == kNone)
                starts.push_back(x);
        if (!starts.empty()) augment_from(starts);
    }
    return size_;
}

bool MatchingEngine::augment_from(const std::vector<NodeId>& starts) {
    // Layered BFS over alternating paths. The queue holds vertices on the
    // start side; crossing to the other side uses an unmatched edge, coming
    // back uses the matched one. parent_ records the unmatched edge used to
    // reach an other-side vertex.
    ++stamp_;
    std::deque<NodeId> queue;
    for (NodeId s : starts) {
        seen_[s] = stamp_;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        NodeId x = queue.front();
        queue.pop_front();
        for (const auto& [y, edge_id] : g_.neighbors(x)) {
            (void)edge_id;
            g_.add_steps(1);
            if (seen_[y] == stamp_ || partner_[x] == y) continue;
            seen_[y] = stamp_;
            parent_[y] = x;
            if (partner_[y] == kNone) {
                // free vertex reached: flip the path
                NodeId cur = y;
                while (cur != kNone) {
                    NodeId from = parent_[cur];
                    NodeId next = partner_[from];
                    partner_[from] = cur;
                    partner_[cur] = from;
                    g_.add_steps(1);
                    cur = next;
                }
                ++size_;
                return true;
            }
            NodeId back = partner_[y];
            if (seen_[back] != stamp_) {
                seen_[back] = stamp_;
                queue.push_back(back);
            }
        }
    }
    return false;
}

std::size_t MatchingEngine::query_size() {
    g_.count_query();
    return size_;
}

} // namespace dynred
