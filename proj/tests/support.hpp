#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "pg/game.hpp"

namespace pgtest {

/// (priority, owner 0/1, successors) per vertex.
using Spec = std::vector<std::tuple<int, int, std::vector<int>>>;
pg::ParityGame make_game(const Spec& spec);

/// Seeded random games with 2..max_n vertices, cycling through the three generator classes.
std::vector<pg::ParityGame> small_games(int count, std::uint64_t seed, int max_n = 8);

/// Runs a registered solver on the whole game without preprocessing.
pg::Solution raw_solve(const std::string& solver, const pg::ParityGame& g);

/// Attractor by the textbook fixpoint: add a vertex when alpha owns it and has an edge into the set,
/// or when all its successors inside the subgame are in the set.
pg::VertexSet naive_attractor(const pg::ParityGame& g, const pg::VertexSet& sub, pg::Player alpha,
                              const pg::VertexSet& target);

std::vector<std::string> solvers();

}  // namespace pgtest
