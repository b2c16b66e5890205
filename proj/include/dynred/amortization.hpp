#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dynred {

struct PhaseRecord {
    std::uint64_t ops;        // k: edges + nodes inserted in the phase
    std::uint64_t node_count; // n-hat: nodes in the graph at phase start
    std::uint64_t cost;       // elementary steps spent by the phase's insertions
    bool kept;
};

/// Per-phase amortized-cost bookkeeping for the node-addition rollback
/// driver. A phase is kept iff its cost strictly exceeds 2*k*n_hat^alpha;
/// on the boundary it is rolled back.
class CreditLedger {
public:
    explicit CreditLedger(double alpha);

    /// Appends a record with the keep decision and returns it.
    bool record_phase(std::uint64_t k, std::uint64_t n_hat, std::uint64_t cost);

    double alpha() const { return alpha_; }
    const std::vector<PhaseRecord>& phases() const { return phases_; }
    std::uint64_t kept_cost() const { return kept_cost_; }
    std::uint64_t rolled_cost() const { return rolled_cost_; }

private:
    double alpha_;
    std::vector<PhaseRecord> phases_;
    std::uint64_t kept_cost_ = 0;
    std::uint64_t rolled_cost_ = 0;
};

struct ScalingFit {
    double exponent; // least-squares slope in log-log space
    double residual; // root mean squared log-space residual
    std::size_t sample_count;
};

/// Ordinary least squares on (log size, log steps). Requires at least two
/// distinct positive sizes and positive step counts.
ScalingFit fit_exponent(const std::vector<std::pair<double, double>>& samples);

} // namespace dynred
