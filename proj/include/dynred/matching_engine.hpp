#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "dynred/dyngraph.hpp"

namespace dynred {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

/// Incremental maximum-cardinality bipartite matching under edge insertions.
///
/// The engine maintains an actual matching, not just its size: the partner
/// map stays symmetric, matched pairs are graph edges, and after every
/// insertion the size is again maximum (one insertion changes the optimum by
/// at most 1, so a single augmentation attempt restores it).
class MatchingEngine {
public:
    explicit MatchingEngine(DynGraph& g);

    // Nodes enter the bipartition through the engine so it knows the sides.
    NodeId add_node(Side side);

    /// Insert the edge and attempt exactly one alternating-path augmentation.
    /// Returns the new matching size. Errors on same-side endpoints.
    std::size_t insert_edge(NodeId u, NodeId v);

    /// The maintained size; counted as a query, O(1) elementary steps.
    std::size_t query_size();

    std::size_t current_size() const { return size_; }
    std::optional<NodeId> partner(NodeId v) const;
    Side side(NodeId v) const { return static_cast<Side>(side_[v]); }
    DynGraph& graph() { return g_; }

private:
    static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

    bool augment_from(const std::vector<NodeId>& starts);

    DynGraph& g_;
    std::vector<std::uint8_t> side_;
    std::vector<NodeId> partner_;
    std::size_t size_ = 0;
    // scratch buffers for the layered search
    std::vector<NodeId> parent_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_ = 0;
};

} // namespace dynred
