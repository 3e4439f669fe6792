#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pg/game.hpp"
#include "pg/solvers.hpp"

namespace pg {

struct BenchRecord {
    std::string game;
    std::string cls;
    std::string solver;
    /// Solve time, or the timeout when the run did not finish.
    double seconds = 0;
    bool timed_out = false;
    /// The child died without reporting; always counted as a timeout too.
    bool crashed = false;
    bool verified = false;
    /// Winner per vertex (0 Even, 1 Odd) when BenchOptions::collect_winners is set and the run finished.
    std::vector<std::int8_t> winners;
};

/// Runtime of a finished run, factor * timeout otherwise.
double par2_score(const BenchRecord& r, double timeout, double factor = 2.0);
double par2_sum(const std::vector<BenchRecord>& records, double timeout, double factor = 2.0);

struct Par2Row {
    std::string solver;
    std::string cls;
    double par2_seconds = 0;
    int timeouts = 0;
};

/// One row per (solver, class), sorted by solver then class.
std::vector<Par2Row> par2_table(const std::vector<BenchRecord>& records, double timeout);

struct CactusRow {
    std::string solver;
    int rank = 0;
    double seconds = 0;
};

/// Per solver, the runtimes of finished runs in increasing order, ranked from 1.
std::vector<CactusRow> cactus_rows(const std::vector<BenchRecord>& records);

void write_par2_csv(std::ostream& os, const std::vector<Par2Row>& rows);
void write_cactus_csv(std::ostream& os, const std::vector<CactusRow>& rows);
void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records);

struct BenchGame {
    std::string id;
    std::string cls;
    ParityGame game;
};

struct BenchOptions {
    std::vector<std::string> solvers;
    double timeout = 900;
    /// Solver field is overwritten per run.
    PipelineOptions pipeline;
    bool verify = true;
    bool collect_winners = false;
    /// Called after every run.
    std::function<void(const BenchRecord&)> progress;
};

/// Runs one solver on one game in a forked child with a wall-clock budget.
BenchRecord run_isolated(const BenchGame& game, const std::string& solver, const BenchOptions& opts);

/// Runs every solver on every game, one child at a time.
std::vector<BenchRecord> run_benchmark(const std::vector<BenchGame>& games, const BenchOptions& opts);

}  // namespace pg
