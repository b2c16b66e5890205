#include "dynred/dyngraph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dynred/errors.hpp"

namespace dynred {

NodeId DynGraph::insert_node() {
    NodeId handle = static_cast<NodeId>(num_nodes_);
    ++num_nodes_;
    adj_.emplace_back();
    log_.push_back({LogEntry::Kind::InsertNode, handle, 0, 0, 0});
    counters_.elementary_steps += 1;
    return handle;
}

EdgeId DynGraph::push_edge(NodeId u, NodeId v, std::int64_t cap) {
    if (u >= num_nodes_ || v >= num_nodes_)
        throw std::out_of_range("insert_edge: unknown node handle");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, cap});
    adj_[u].push_back({v, id});
    if (!directed_) adj_[v].push_back({u, id});
    log_.push_back({LogEntry::Kind::InsertEdge, 0, u, v, cap});
    counters_.insertions += 1;
    counters_.elementary_steps += 1;
    return id;
}

EdgeId DynGraph::insert_edge(NodeId u, NodeId v) {
    if (capacitated_)
        throw std::invalid_argument("insert_edge: capacitated graph requires a capacity");
    return push_edge(u, v, 0);
}

EdgeId DynGraph::insert_edge(NodeId u, NodeId v, std::int64_t cap) {
    if (!capacitated_)
        throw std::invalid_argument("insert_edge: capacity supplied to uncapacitated graph");
    return push_edge(u, v, cap);
}

void DynGraph::rollback(std::size_t k) {
    if (k > log_.size())
        throw std::out_of_range("rollback: k exceeds log length");
    for (std::size_t step = 0; step < k; ++step) {
        const LogEntry& entry = log_.back();
        if (entry.kind == LogEntry::Kind::InsertNode) {
            adj_.pop_back();
            --num_nodes_; // rewinds the handle allocator
        } else {
            const EdgeRec& e = edges_.back();
            adj_[e.u].pop_back();
            if (!directed_) adj_[e.v].pop_back();
            edges_.pop_back();
        }
        log_.pop_back();
    }
}

std::vector<LogEntry> DynGraph::reverse_replay() const {
    return {log_.rbegin(), log_.rend()};
}

void DynGraph::serialize_log(std::ostream& os) const {
    for (const LogEntry& entry : log_) {
        if (entry.kind == LogEntry::Kind::InsertNode) {
            os << "N\n";
        } else if (capacitated_) {
            os << "E " << entry.u << ' ' << entry.v << ' ' << entry.cap << '\n';
        } else {
            os << "E " << entry.u << ' ' << entry.v << '\n';
        }
    }
}

void DynGraph::apply_log_text(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        char tag = 0;
        ls >> tag;
        if (tag == 'N') {
            insert_node();
        } else if (tag == 'E') {
            NodeId u, v;
            if (!(ls >> u >> v))
                throw ParseError("log line " + std::to_string(lineno) + ": bad edge record");
            std::int64_t cap;
            if (ls >> cap) {
                insert_edge(u, v, cap);
            } else {
                insert_edge(u, v);
            }
        } else {
            throw ParseError("log line " + std::to_string(lineno) + ": unknown record tag");
        }
    }
}

} // namespace dynred
