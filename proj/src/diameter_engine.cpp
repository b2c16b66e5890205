#include "dynred/diameter_engine.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "dynred/errors.hpp"

namespace dynred {

namespace {

// One BFS per source over the graph's adjacency, charging one step per
// scanned adjacency entry.
DiameterAnswer diameter_impl(DynGraph& g) {
    const std::size_t n = g.num_nodes();
    DiameterAnswer answer;
    if (n <= 1) return answer;

    std::vector<int> dist(n);
    std::deque<NodeId> queue;
    for (NodeId src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        queue.assign(1, src);
        std::size_t reached = 1;
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (const auto& [v, edge_id] : g.neighbors(u)) {
                (void)edge_id;
                g.add_steps(1);
                if (dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                ++reached;
                queue.push_back(v);
            }
        }
        if (reached < n) {
            answer.infinite = true;
            return answer;
        }
        answer.value = std::max<std::int64_t>(answer.value,
                                              *std::max_element(dist.begin(), dist.end()));
    }
    return answer;
}

} // namespace

DiameterAnswer exact_diameter(DynGraph& g) {
    g.count_query();
    DiameterAnswer answer = diameter_impl(g);
    answer.method = DiameterAnswer::Method::Exact;
    return answer;
}

int distinguish_3_4(DynGraph& g) {
    g.count_query();
    DiameterAnswer answer = diameter_impl(g);
    if (answer.infinite || (answer.value != 3 && answer.value != 4))
        throw GuardViolation("distinguish_3_4: true diameter is " +
                             (answer.infinite ? std::string("infinite")
                                              : std::to_string(answer.value)) +
                             ", not 3 or 4 (gadget construction bug?)");
    return static_cast<int>(answer.value);
}

int distinguish_3_4(DynGraph& g, const DiameterApproximation& approx) {
    g.count_query();
    return approx(g) > 3.0 ? 4 : 3;
}

} // namespace dynred
