#pragma once

#include <cstdint>
#include <stdexcept>

#include "pg/game.hpp"

namespace pg {

class TooLarge : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Largest number of positional strategies brute_force_solve enumerates per player.
inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/**
 * Exact solution by strategy enumeration. For every positional strategy of a
 * player, the opponent wins from v iff v can reach a cycle whose top priority
 * has the opponent's parity; the player's region is the union over all
 * strategies, and the strategy with the largest winning set wins uniformly.
 * Throws TooLarge when either player has more than kBruteForceLimit strategies.
 */
Solution brute_force_solve(const ParityGame& game);

}  // namespace pg
