#pragma once

#include <cstdint>

namespace pg {

/// Work counters filled in by solvers when a pointer is supplied.
struct SolveStats {
    std::uint64_t frames = 0;       // recursive calls (zielonka)
    std::uint64_t attractions = 0;  // attractor computations
    std::uint64_t lifts = 0;        // successful measure updates
    std::uint64_t promotions = 0;
    std::uint64_t delayed = 0;      // promotions postponed by the delay heuristic
    std::uint64_t dominions = 0;
};

}  // namespace pg
