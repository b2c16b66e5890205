#pragma once

#include <cstdint>
#include <functional>

#include "dynred/dyngraph.hpp"

namespace dynred {

struct DiameterAnswer {
    enum class Method : std::uint8_t { Exact, Distinguisher };

    bool infinite = false;
    std::int64_t value = 0; // valid when !infinite
    Method method = Method::Exact;
};

/// All-sources BFS maximum finite eccentricity. Disconnected graphs report
/// infinite rather than erroring, because intermediate incremental states can
/// be disconnected. Counted as one query; BFS work is charged to the graph.
DiameterAnswer exact_diameter(DynGraph& g);

/// The 3-vs-4 distinguisher any (4/3 - eps)-approximation would provide. The
/// caller guarantees the true diameter is 3 or 4; anything else signals a
/// gadget construction bug and raises GuardViolation. The reference
/// implementation delegates to the exact computation.
int distinguish_3_4(DynGraph& g);

// Estimate of the diameter within a factor strictly better than 4/3 (never
// exceeding the true value). Any such plug-in separates 3 from 4, since an
// estimate above 4/(4/3) = 3 can only come from diameter 4.
using DiameterApproximation = std::function<double(DynGraph&)>;

int distinguish_3_4(DynGraph& g, const DiameterApproximation& approx);

} // namespace dynred
