#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pg/game.hpp"

namespace pg {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Game read from PGSolver text. original_ids[v] is the id vertex v had in the file.
struct PgsolverInput {
    ParityGame game;
    std::vector<std::int64_t> original_ids;
    bool renamed = false;
};

PgsolverInput read_pgsolver(std::string_view text);
PgsolverInput read_pgsolver(std::istream& in);
ParityGame parse_pgsolver(std::string_view text);

void write_pgsolver(std::ostream& out, const ParityGame& game);
std::string write_pgsolver(const ParityGame& game);

/// Writes solved vertices as "paritysol N;" followed by "id winner [strategy];".
/// When ids is nonempty, vertex v is written as ids[v].
void write_solution(std::ostream& out, const Solution& sol, std::span<const std::int64_t> ids = {});
std::string write_solution(const Solution& sol, std::span<const std::int64_t> ids = {});

/// Reads a solution for a game with n vertices. ids maps file ids back to
/// vertices when the game was renamed on input.
Solution read_solution(std::string_view text, int n, std::span<const std::int64_t> ids = {});

}  // namespace pg
