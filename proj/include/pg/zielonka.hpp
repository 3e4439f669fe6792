#pragma once

#include <functional>
#include <span>

#include "pg/game.hpp"
#include "pg/stats.hpp"

namespace pg {

struct ZielonkaOptions {
    /// Extended attractor plus skipping the second recursion when nothing is attracted.
    bool optimized = true;
    /// Threads for the attractor; 1 keeps everything sequential and deterministic.
    int workers = 1;
    SolveStats* stats = nullptr;
    /// Observer called right before a second recursion with the subgame, the
    /// opponent's attractor and the vertices put back into play.
    std::function<void(std::span<const int> subgame, std::span<const int> attracted, std::span<const int> reset)>
        on_reset;
};

/// Solves the subgame, which must be total (every vertex keeps a successor inside).
Solution zielonka_solve(const ParityGame& game, const VertexSet& subgame, const ZielonkaOptions& opts = {});

/// The union of alpha-attractors to the top layers of subgame while the remaining top priority has parity alpha.
VertexSet zielonka_attr(const ParityGame& game, const VertexSet& subgame, Player alpha);

}  // namespace pg
