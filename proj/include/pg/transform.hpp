#pragma once

#include <vector>

#include "pg/game.hpp"

namespace pg {

/// A game with renamed vertices. to_new[old] and to_old[new] are inverse permutations.
struct RenamedGame {
    ParityGame game;
    std::vector<int> to_new;
    std::vector<int> to_old;

    /// Maps a solution of the renamed game back to the original vertex ids.
    Solution restore(const Solution& sol) const;
};

/**
 * Renumbers priorities into an initial segment without gaps (distinct
 * priorities stay distinct, parity and order are kept) and sorts the vertices
 * by the new priority, ties kept in original order.
 */
RenamedGame normalize(const ParityGame& game);

/// Priority map used by normalize: priority value -> new value, -1 for unused values.
std::vector<int> gap_free_priority_map(const ParityGame& game);

/// Merges runs of adjacent distinct priorities of equal parity into one priority.
ParityGame compress_priorities(const ParityGame& game);
std::vector<int> compression_map(const ParityGame& game);

/// Gives every vertex its own priority, keeping parity and the order of distinct priorities.
ParityGame inflate_priorities(const ParityGame& game);

/// Highest priority in subgame. Throws GameError when subgame is empty.
int top_priority(const ParityGame& game, const VertexSet& subgame);

}  // namespace pg
