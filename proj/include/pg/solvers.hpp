#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pg/game.hpp"
#include "pg/preprocess.hpp"
#include "pg/stats.hpp"
#include "pg/verifier.hpp"

namespace pg {

/// Registered solver names: zlk uzlk spm qpt pp ppp rr dp rrdp.
std::span<const std::string_view> solver_names();
bool is_solver(std::string_view name);

/// Subgame solver by name; workers only affects zlk/uzlk. Throws std::invalid_argument for unknown names.
SubgameSolver make_solver(std::string_view name, int workers = 1, SolveStats* stats = nullptr);

struct PipelineOptions {
    std::string solver = "zlk";
    int workers = 1;
    PreprocessOptions preprocess;
    /// Solve bottom SCCs one at a time.
    bool scc = false;
    bool inflate = false;
    bool compress = false;
    /// Check the final solution against the input game.
    bool verify = false;
};

struct PipelineResult {
    Solution solution;
    PreprocessStats preprocess;
    SolveStats stats;
    std::optional<VerifyReport> report;
    /// Wall time of preprocessing plus solving.
    double seconds = 0;
};

/**
 * Normalizes the game, optionally compresses or inflates priorities, applies
 * the enabled reductions, solves what is left and maps the solution back to
 * the input vertex ids.
 */
PipelineResult run_pipeline(const ParityGame& game, const PipelineOptions& opts);

/// Shorthand: run_pipeline(...).solution.
Solution solve(const ParityGame& game, const PipelineOptions& opts = {});

}  // namespace pg
