#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pg/game.hpp"

namespace pg {

struct PreprocessStats {
    int self_loops = 0;   // vertices solved by the self-loop rule (attractors included)
    int wcwc = 0;         // vertices solved through winner-controlled winning cycles
    int single_parity = 0;
    int dropped_loops = 0;
};

/**
 * Outcome of a reduction: solved holds winners and strategies for removed
 * vertices, remaining is the rest of the input mask. dropped_loops lists
 * vertices whose self-loop loses for their owner and can be ignored by
 * whatever solves the remainder.
 */
struct PreprocessResult {
    Solution solved;
    VertexSet remaining;
    std::vector<int> dropped_loops;
    PreprocessStats stats;
};

/*
 * The reductions below expect `remaining` to be closed in the sense that an
 * edge leaving it goes to a vertex already won by the opponent of its owner,
 * which holds for the whole game and for any complement of attractors to
 * solved regions.
 */

/// Solves vertices with a self-loop of their owner's parity, or whose only move is a losing self-loop.
PreprocessResult solve_self_loops(const ParityGame& game, const VertexSet& remaining);

/// Solves cycles through vertices that are all owned by alpha and carry alpha's parity, for both players.
PreprocessResult solve_winner_controlled_cycles(const ParityGame& game, const VertexSet& remaining);

/// If every priority in remaining has one parity, that player wins all of it.
PreprocessResult solve_single_parity(const ParityGame& game, const VertexSet& remaining);

struct PreprocessOptions {
    bool self_loops = true;
    bool wcwc = true;
    bool single_parity = true;

    bool any() const { return self_loops || wcwc || single_parity; }
};

/// Runs the enabled reductions in order until none of them solves anything new.
PreprocessResult preprocess(const ParityGame& game, const VertexSet& remaining, const PreprocessOptions& opts = {});

/// Copy of game without the self-loops of the listed vertices. Each must keep another successor.
ParityGame drop_self_loops(const ParityGame& game, std::span<const int> vertices);

using SubgameSolver = std::function<Solution(const ParityGame&, const VertexSet&)>;

/**
 * Solves subgame one bottom strongly connected component at a time: each
 * component is solved by solver, both winning regions are extended by
 * attractors, and the next component (with solved vertices removed) follows.
 */
Solution scc_solve(const ParityGame& game, const VertexSet& subgame, const SubgameSolver& solver);

}  // namespace pg
