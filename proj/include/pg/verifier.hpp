#pragma once

#include <string>
#include <vector>

#include "pg/game.hpp"

namespace pg {

enum class ViolationKind {
    Unsolved,           // vertex has no winner
    MissingStrategy,    // winner-owned vertex without a strategy
    NotASuccessor,      // strategy target is not a successor
    StrategyLeaves,     // strategy target won by the other player
    LoserEscapes,       // loser-owned vertex has a successor outside the region
    LosingCycle,        // consistent cycle whose top priority favours the loser
};

const char* describe(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int vertex;
    /// For LosingCycle: the vertices of one offending cycle, starting at vertex.
    std::vector<int> cycle;
};

struct VerifyReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

struct VerifyOptions {
    /// When false, unsolved vertices are skipped and the solved part is checked on its own.
    bool require_complete = true;
    /// When set, only this subgame is checked and edges leaving it are ignored.
    const VertexSet* subgame = nullptr;
};

/**
 * Checks a solution: winners own a strategy edge into their region, every
 * region is closed under the loser's moves, and every cycle consistent with
 * the winner's strategy inside a region has a top priority of the winner's
 * parity.
 */
VerifyReport verify(const ParityGame& game, const Solution& sol, const VerifyOptions& opts = {});

}  // namespace pg
