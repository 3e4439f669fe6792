#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pg/brute_force.hpp"
#include "pg/preprocess.hpp"
#include "pg/solvers.hpp"
#include "pg/verifier.hpp"
#include "pg/zielonka.hpp"
#include "support.hpp"

using namespace pg;
using pgtest::make_game;

TEST_CASE("winning self-loop solves its attractor")
{
    // 0 (Even, 2) loops; 1 (Odd) must go to 0; 2 (Odd, 1) loops too.
    const ParityGame g = make_game({{2, 0, {0, 2}}, {1, 1, {0}}, {1, 1, {2, 1}}});
    const auto r = solve_self_loops(g, VertexSet(3, true));
    CHECK(r.remaining.empty());
    CHECK(r.solved.winner(0) == Player::Even);
    CHECK(r.solved.strategy(0) == 0);
    CHECK(r.solved.winner(1) == Player::Even);
    CHECK(r.solved.winner(2) == Player::Odd);
    CHECK(verify(g, r.solved).ok());
}

TEST_CASE("losing self-loop is dropped or forced")
{
    // 0 (Even, 1) loops or goes to 1; 1 (Odd, 0) only loops, which Odd loses.
    const ParityGame g = make_game({{1, 0, {0, 1}}, {0, 1, {1}}});
    const auto r = solve_self_loops(g, VertexSet(2, true));
    CHECK(r.solved.winner(1) == Player::Even);
    CHECK(r.solved.winner(0) == Player::Even);
    CHECK(r.solved.strategy(0) == 1);

    // Here 0 keeps another move, so its losing loop is only dropped.
    const ParityGame h = make_game({{1, 0, {0, 1}}, {2, 1, {0, 2}}, {4, 0, {1}}});
    const auto q = solve_self_loops(h, VertexSet(3, true));
    CHECK_FALSE(q.solved.solved(0));
    CHECK(q.dropped_loops == std::vector<int>{0});
    const ParityGame d = drop_self_loops(h, q.dropped_loops);
    CHECK_FALSE(d.has_edge(0, 0));
    CHECK(d.has_edge(0, 1));
}

TEST_CASE("winner-controlled winning cycle")
{
    // 0 -> 1 -> 0 all Odd with odd top priority, 2 (Even) escapes into it.
    const ParityGame g = make_game({{3, 1, {1}}, {1, 1, {0, 2}}, {2, 0, {0}}});
    const auto r = solve_winner_controlled_cycles(g, VertexSet(3, true));
    CHECK(r.remaining.empty());
    for (int v = 0; v < 3; ++v) CHECK(r.solved.winner(v) == Player::Odd);
    CHECK(verify(g, r.solved).ok());
}

TEST_CASE("cycle with a foreign vertex is not winner-controlled")
{
    const ParityGame g = make_game({{3, 1, {1}}, {1, 0, {0, 2}}, {2, 0, {0}}});
    const auto r = solve_winner_controlled_cycles(g, VertexSet(3, true));
    CHECK(r.solved.solved_count() == 0);
}

TEST_CASE("single parity game goes to that player")
{
    const ParityGame g = make_game({{0, 1, {1}}, {2, 1, {0, 1}}});
    const auto r = solve_single_parity(g, VertexSet(2, true));
    CHECK(r.remaining.empty());
    CHECK(r.solved.winner(0) == Player::Even);
    CHECK(r.solved.winner(1) == Player::Even);
    CHECK(verify(g, r.solved).ok());
}

TEST_CASE("preprocessed regions agree with the oracle and verify")
{
    for (const auto& g : pgtest::small_games(300, 17)) {
        const Solution oracle = brute_force_solve(g);
        const auto r = preprocess(g, VertexSet(g.size(), true));
        for (int v = 0; v < g.size(); ++v) {
            CHECK(r.solved.solved(v) != r.remaining.contains(v));
            if (r.solved.solved(v)) CHECK(r.solved.winner(v) == oracle.winner(v));
        }
        VerifyOptions o;
        o.require_complete = false;
        CHECK(verify(g, r.solved, o).ok());
    }
}

TEST_CASE("scc solving matches a direct solve")
{
    for (const auto& g : pgtest::small_games(200, 23, 12)) {
        const VertexSet all(g.size(), true);
        const Solution direct = zielonka_solve(g, all);
        const Solution by_scc = scc_solve(g, all, [](const ParityGame& h, const VertexSet& s) {
            return zielonka_solve(h, s);
        });
        CHECK(by_scc.same_winners(direct));
        CHECK(verify(g, by_scc).ok());
    }
}

TEST_CASE("pipeline option combinations agree")
{
    for (const auto& g : pgtest::small_games(100, 31, 10)) {
        const Solution base = solve(g);
        for (int mask = 0; mask < 32; ++mask) {
            PipelineOptions o;
            o.preprocess = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
            o.scc = (mask & 8) != 0;
            o.inflate = (mask & 16) != 0;
            o.compress = !o.inflate && mask == 7;
            o.verify = true;
            const auto r = run_pipeline(g, o);
            CHECK(r.solution.same_winners(base));
            CHECK(r.report->ok());
        }
    }
}
