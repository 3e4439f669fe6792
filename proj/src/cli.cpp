#include "pg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pg/benchmark.hpp"
#include "pg/generator.hpp"
#include "pg/pgsolver_io.hpp"
#include "pg/solvers.hpp"
#include "pg/verifier.hpp"

namespace pg {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in)
{
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

struct SolveFlags {
    std::string solver = "zlk";
    int workers = 1;
    bool no_loops = false, no_wcwc = false, no_single = false;
    bool scc = false, inflate = false, compress = false;

    void add(CLI::App* app)
    {
        std::vector<std::string> names(solver_names().begin(), solver_names().end());
        app->add_option("--solver", solver, "Solver")->check(CLI::IsMember(names));
        app->add_option("--workers", workers, "Threads for the parallel attractor")->check(CLI::Range(1, 1024));
        app->add_flag("--no-loops", no_loops, "Disable self-loop solving");
        app->add_flag("--no-wcwc", no_wcwc, "Disable winner-controlled winning cycle detection");
        app->add_flag("--no-single", no_single, "Disable single-parity solving");
        app->add_flag("--scc", scc, "Solve bottom SCCs one at a time");
        auto* i = app->add_flag("--inflate", inflate, "Give every vertex a distinct priority");
        auto* c = app->add_flag("--compress", compress, "Merge adjacent priorities of equal parity");
        i->excludes(c);
    }

    PipelineOptions pipeline() const
    {
        PipelineOptions o;
        o.solver = solver;
        o.workers = workers;
        o.preprocess = {!no_loops, !no_wcwc, !no_single};
        o.scc = scc;
        o.inflate = inflate;
        o.compress = compress;
        return o;
    }
};

int run_solve(const SolveFlags& flags, bool verify_flag, bool stats_flag, const std::string& input,
              const std::string& output, std::istream& in, std::ostream& out, std::ostream& err)
{
    PgsolverInput game = read_pgsolver(slurp(input, in));
    PipelineOptions po = flags.pipeline();
    po.verify = verify_flag;
    const PipelineResult res = run_pipeline(game.game, po);
    if (game.renamed) write_text(output, write_solution(res.solution, game.original_ids), out);
    else write_text(output, write_solution(res.solution), out);
    if (stats_flag) {
        err << "solver " << po.solver << ": " << res.seconds << " s, " << res.stats.attractions << " attractions, "
            << res.stats.lifts << " lifts, " << res.stats.promotions << " promotions, " << res.stats.dominions
            << " dominions; preprocessing solved " << res.preprocess.self_loops << " + " << res.preprocess.wcwc
            << " + " << res.preprocess.single_parity << " vertices\n";
    }
    if (res.report && !res.report->ok()) {
        err << "verification failed: " << res.report->summary() << '\n';
        return kExitVerify;
    }
    return kExitOk;
}

int run_verify(const std::string& game_path, const std::string& sol_path, std::istream& in, std::ostream& out,
               std::ostream& err)
{
    PgsolverInput game = read_pgsolver(slurp(game_path, in));
    const std::string text = slurp(sol_path, in);
    Solution sol = game.renamed ? read_solution(text, game.game.size(), game.original_ids)
                                : read_solution(text, game.game.size());
    const VerifyReport rep = verify(game.game, sol);
    if (!rep.ok()) {
        err << rep.summary() << '\n';
        return kExitVerify;
    }
    out << "ok\n";
    return kExitOk;
}

GenSpec gen_spec(const std::string& cls, int n, std::uint64_t seed, int min_deg, int max_deg)
{
    auto c = parse_game_class(cls);
    if (!c) throw UsageError("unknown game class " + cls);
    return {*c, n, min_deg, max_deg, seed};
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parity game solver suite", "pgsolve"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "Solve a game and print the solution");
    SolveFlags solve_flags;
    solve_flags.add(solve_cmd);
    bool verify_flag = false, stats_flag = false;
    std::string input, output;
    solve_cmd->add_flag("--verify", verify_flag, "Check the solution; exit status 3 if it is wrong");
    solve_cmd->add_flag("--stats", stats_flag, "Print solver counters to stderr");
    solve_cmd->add_option("-o,--output", output, "Solution file (default stdout)");
    solve_cmd->add_option("game", input, "Game file in PGSolver format (default stdin)");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random game");
    std::string gen_class = "lowdeg";
    int gen_n = 100, gen_min = 0, gen_max = 0;
    std::uint64_t seed = 0;
    std::string gen_out;
    gen_cmd->add_option("--class", gen_class, "lowdeg, fullrandom or steady")
        ->check(CLI::IsMember({"lowdeg", "fullrandom", "steady"}));
    gen_cmd->add_option("-n,--vertices", gen_n, "Number of vertices")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--min-degree", gen_min, "Minimum out-degree (default: class bound)");
    gen_cmd->add_option("--max-degree", gen_max, "Maximum out-degree (default: class bound)");
    gen_cmd->add_option("--seed", seed, "Random seed");
    gen_cmd->add_option("-o,--output", gen_out, "Game file (default stdout)");

    auto* bench_cmd = app.add_subcommand("bench", "Run solvers in isolated processes and score them");
    SolveFlags bench_flags;
    bench_flags.add(bench_cmd);
    std::vector<std::string> bench_solvers, bench_classes{"lowdeg", "fullrandom", "steady"}, bench_files;
    std::vector<int> bench_sizes{100};
    int bench_count = 3;
    double timeout = 900;
    std::string out_dir = ".";
    bench_cmd->add_option("--solvers", bench_solvers, "Solvers to run (default all)")->delimiter(',');
    bench_cmd->add_option("--class", bench_classes, "Generated game classes")->delimiter(',');
    bench_cmd->add_option("-n,--vertices", bench_sizes, "Generated game sizes")->delimiter(',');
    bench_cmd->add_option("--count", bench_count, "Generated games per class and size")->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--seed", seed, "Seed of the first generated game");
    bench_cmd->add_option("--timeout", timeout, "Per-run wall-clock budget in seconds")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out-dir", out_dir, "Directory for par2.csv, cactus.csv and runs.csv");
    bench_cmd->add_option("games", bench_files, "Additional game files");

    auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against a game");
    std::string v_game, v_sol;
    verify_cmd->add_option("game", v_game, "Game file")->required();
    verify_cmd->add_option("solution", v_sol, "Solution file")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve_flags, verify_flag, stats_flag, input, output, in, out, err);
        if (*verify_cmd) return run_verify(v_game, v_sol, in, out, err);
        if (*gen_cmd) {
            const ParityGame g = gen_random_game(gen_spec(gen_class, gen_n, seed, gen_min, gen_max));
            write_text(gen_out, write_pgsolver(g), out);
            return kExitOk;
        }
        if (*bench_cmd) {
            BenchOptions bo;
            bo.solvers = bench_solvers;
            if (bo.solvers.empty()) bo.solvers.assign(solver_names().begin(), solver_names().end());
            for (const auto& s : bo.solvers)
                if (!is_solver(s)) throw UsageError("unknown solver " + s);
            bo.timeout = timeout;
            bo.pipeline = bench_flags.pipeline();
            bo.progress = [&](const BenchRecord& r) {
                err << r.game << ' ' << r.solver << ' '
                    << (r.crashed ? "crashed" : r.timed_out ? "timeout" : std::to_string(r.seconds) + " s")
                    << (r.timed_out || r.verified ? "" : " UNVERIFIED") << '\n';
            };

            std::vector<BenchGame> games;
            for (const auto& cls : bench_classes)
                for (int n : bench_sizes)
                    for (int i = 0; i < bench_count; ++i) {
                        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
                        games.push_back({cls + "-" + std::to_string(n) + "-" + std::to_string(s), cls,
                                         gen_random_game(gen_spec(cls, n, s, 0, 0))});
                    }
            for (const auto& f : bench_files)
                games.push_back({std::filesystem::path(f).filename().string(), "file",
                                 read_pgsolver(slurp(f, in)).game});

            const auto records = run_benchmark(games, bo);
            std::filesystem::create_directories(out_dir);
            const std::filesystem::path dir(out_dir);
            std::ofstream par2(dir / "par2.csv"), cactus(dir / "cactus.csv"), runs(dir / "runs.csv");
            if (!par2 || !cactus || !runs) throw UsageError("cannot write to " + out_dir);
            const auto table = par2_table(records, timeout);
            write_par2_csv(par2, table);
            write_cactus_csv(cactus, cactus_rows(records));
            write_records_csv(runs, records);
            write_par2_csv(out, table);
            bool all_verified = true;
            for (const auto& r : records)
                if (!r.timed_out && !r.verified) all_verified = false;
            return all_verified ? kExitOk : kExitVerify;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const GameError& e) {
        err << "invalid game: " << e.what() << '\n';
        return kExitParse;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pg
