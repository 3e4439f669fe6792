#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <string_view>

#include "pg/game.hpp"

namespace pg {

/*
 * Random game classes. All of them draw priorities uniformly from [0, n),
 * owners uniformly, and never create self-loops or duplicate edges.
 *   lowdeg      out-degree uniform in [1, 2]
 *   fullrandom  out-degree uniform in [1, n - 1]
 *   steady      out-degree uniform in [1, 4]; every vertex also draws an
 *               in-degree target in [1, 4] and successors are picked among
 *               vertices still below their target, starved ones first
 */
enum class GameClass { LowDegree, FullRandom, Steady };

const char* name(GameClass c);
std::optional<GameClass> parse_game_class(std::string_view s);

struct GenSpec {
    GameClass cls = GameClass::LowDegree;
    int n = 100;
    /// Out-degree bounds; 0 picks the class default.
    int min_degree = 0;
    int max_degree = 0;
    std::uint64_t seed = 0;
};

/// Effective (min, max) out-degree of a spec.
std::pair<int, int> degree_bounds(const GenSpec& spec);

/// Throws std::invalid_argument when n < 2 or the degree bounds are infeasible.
ParityGame gen_random_game(const GenSpec& spec);

/// mt19937_64 with bounded draws that do not depend on the standard library's distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace pg
