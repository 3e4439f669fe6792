#include "pg/solvers.hpp"

#include <array>
#include <chrono>
#include <stdexcept>

#include "pg/priority_promotion.hpp"
#include "pg/qpt.hpp"
#include "pg/spm.hpp"
#include "pg/transform.hpp"
#include "pg/zielonka.hpp"

namespace pg {

namespace {

constexpr std::array<std::string_view, 9> kNames = {"zlk", "uzlk", "spm", "qpt", "pp", "ppp", "rr", "dp", "rrdp"};

}  // namespace

std::span<const std::string_view> solver_names() { return kNames; }

bool is_solver(std::string_view name)
{
    for (auto n : kNames)
        if (n == name) return true;
    return false;
}

SubgameSolver make_solver(std::string_view name, int workers, SolveStats* stats)
{
    if (name == "zlk" || name == "uzlk") {
        ZielonkaOptions o;
        o.optimized = name == "zlk";
        o.workers = workers;
        o.stats = stats;
        return [o](const ParityGame& g, const VertexSet& s) { return zielonka_solve(g, s, o); };
    }
    if (name == "spm") {
        SpmOptions o;
        o.lifting.stats = stats;
        return [o](const ParityGame& g, const VertexSet& s) { return spm_solve(g, s, o); };
    }
    if (name == "qpt") {
        LiftingOptions o;
        o.stats = stats;
        return [o](const ParityGame& g, const VertexSet& s) { return qpt_solve(g, s, o); };
    }
    if (auto v = parse_promotion_variant(name))
        return [v = *v, stats](const ParityGame& g, const VertexSet& s) { return pp_solve(g, s, v, stats); };
    throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

PipelineResult run_pipeline(const ParityGame& game, const PipelineOptions& opts)
{
    if (opts.inflate && opts.compress) throw std::invalid_argument("inflate and compress are exclusive");
    PipelineResult out;
    SubgameSolver solver = make_solver(opts.solver, opts.workers, &out.stats);

    const auto t0 = std::chrono::steady_clock::now();
    RenamedGame renamed = normalize(game);
    if (opts.compress) renamed.game = compress_priorities(renamed.game);
    if (opts.inflate) renamed.game = inflate_priorities(renamed.game);
    const ParityGame& g = renamed.game;
    const int n = g.size();

    PreprocessResult pre{Solution(n), VertexSet(n, true), {}, {}};
    if (opts.preprocess.any() && n > 0) pre = preprocess(g, pre.remaining, opts.preprocess);
    out.preprocess = pre.stats;

    Solution sol = std::move(pre.solved);
    if (!pre.remaining.empty()) {
        const ParityGame reduced = pre.dropped_loops.empty() ? ParityGame() : drop_self_loops(g, pre.dropped_loops);
        const ParityGame& h = pre.dropped_loops.empty() ? g : reduced;
        sol.merge(opts.scc ? scc_solve(h, pre.remaining, solver) : solver(h, pre.remaining));
    }
    out.solution = renamed.restore(sol);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (opts.verify) out.report = verify(game, out.solution);
    return out;
}

Solution solve(const ParityGame& game, const PipelineOptions& opts) { return run_pipeline(game, opts).solution; }

}  // namespace pg
