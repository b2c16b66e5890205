#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace dynred {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Cumulative work counters. They are monotone: rollback never rewinds them,
// work already spent stays spent.
struct OpCounters {
    std::uint64_t insertions = 0;       // edge insertions
    std::uint64_t queries = 0;
    std::uint64_t elementary_steps = 0; // unit work charged by the engines
};

struct LogEntry {
    enum class Kind : std::uint8_t { InsertNode, InsertEdge };
    Kind kind;
    NodeId node = 0;      // InsertNode: the allocated handle
    NodeId u = 0, v = 0;  // InsertEdge endpoints
    std::int64_t cap = 0; // InsertEdge capacity (capacitated graphs only)

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

struct EdgeRec {
    NodeId u, v;
    std::int64_t cap; // 0 on uncapacitated graphs

    friend bool operator==(const EdgeRec&, const EdgeRec&) = default;
};

/// Append-only dynamic graph with a replayable operation log.
///
/// Node handles are allocated sequentially and edge ids equal the edge's
/// position in the log-ordered edge list, so replaying the log from an empty
/// graph reproduces the graph exactly. rollback(k) undoes the last k log
/// entries bit-exactly (the handle allocator rewinds with them). Deletions
/// exist only through reverse_replay(): the schedule that removes insertions
/// in reverse order, which is how decremental instances are derived from
/// incremental ones.
///
/// Cost model: every insert charges one elementary step (the unit append);
/// engines layered on top charge their own scan work through add_steps().
/// Rollback charges nothing and never decreases any counter.
class DynGraph {
public:
    DynGraph(bool directed, bool capacitated)
        : directed_(directed), capacitated_(capacitated) {}

    bool directed() const { return directed_; }
    bool capacitated() const { return capacitated_; }

    NodeId insert_node();
    EdgeId insert_edge(NodeId u, NodeId v);
    EdgeId insert_edge(NodeId u, NodeId v, std::int64_t cap);

    /// Undo the last k log entries. Counters are left untouched.
    void rollback(std::size_t k);

    /// Deletion schedule: the log's insertions in reverse order. Applying it
    /// as deletions to the final graph walks back through every intermediate
    /// state to the empty graph.
    std::vector<LogEntry> reverse_replay() const;

    std::size_t num_nodes() const { return num_nodes_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t log_size() const { return log_.size(); }

    const EdgeRec& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    const std::vector<LogEntry>& log() const { return log_; }

    // (neighbor, edge id) pairs in insertion order. Undirected graphs list
    // both directions, directed graphs list out-edges only.
    const std::vector<std::pair<NodeId, EdgeId>>& neighbors(NodeId v) const {
        return adj_[v];
    }

    const OpCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = OpCounters{}; }
    void add_steps(std::uint64_t n) { counters_.elementary_steps += n; }
    void count_query() { ++counters_.queries; }

    // Line-oriented log text: `N` per node insert, `E u v [cap]` per edge
    // insert. apply_log_text appends the parsed records to this graph;
    // round-trips are exact.
    void serialize_log(std::ostream& os) const;
    void apply_log_text(std::istream& is);

private:
    EdgeId push_edge(NodeId u, NodeId v, std::int64_t cap);

    bool directed_;
    bool capacitated_;
    std::size_t num_nodes_ = 0;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<std::pair<NodeId, EdgeId>>> adj_;
    std::vector<LogEntry> log_;
    OpCounters counters_;
};

} // namespace dynred
