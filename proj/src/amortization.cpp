#include "dynred/amortization.hpp"

#include <cmath>
#include <stdexcept>

namespace dynred {

CreditLedger::CreditLedger(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("CreditLedger: alpha must lie in (0, 1)");
}

bool CreditLedger::record_phase(std::uint64_t k, std::uint64_t n_hat, std::uint64_t cost) {
    if (k < 1) throw std::invalid_argument("record_phase: k must be >= 1");
    if (n_hat < 1) throw std::invalid_argument("record_phase: n_hat must be >= 1");
    // strictly greater than the amortized credit, per the rule
    double threshold = 2.0 * static_cast<double>(k) *
                       std::pow(static_cast<double>(n_hat), alpha_);
    bool kept = static_cast<double>(cost) > threshold;
    phases_.push_back({k, n_hat, cost, kept});
    if (kept)
        kept_cost_ += cost;
    else
        rolled_cost_ += cost;
    return kept;
}

ScalingFit fit_exponent(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("fit_exponent: need at least two samples");
    std::vector<std::pair<double, double>> logs;
    logs.reserve(samples.size());
    for (const auto& [size, steps] : samples) {
        if (size <= 0.0 || steps <= 0.0)
            throw std::invalid_argument("fit_exponent: samples must be positive");
        logs.emplace_back(std::log(size), std::log(steps));
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : logs) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(logs.size());
    mean_y /= static_cast<double>(logs.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : logs) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_exponent: need at least two distinct sizes");
    double slope = sxy / sxx;
    double intercept = mean_y - slope * mean_x;
    double sq = 0.0;
    for (const auto& [x, y] : logs) {
        double r = y - (slope * x + intercept);
        sq += r * r;
    }
    return {slope, std::sqrt(sq / static_cast<double>(logs.size())),
            logs.size()};
}

} // namespace dynred
