#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pg/brute_force.hpp"
#include "pg/generator.hpp"
#include "pg/verifier.hpp"
#include "pg/zielonka.hpp"
#include "support.hpp"

using namespace pg;
using pgtest::make_game;

TEST_CASE("brute force on a two-vertex game")
{
    // 0 (Even, 1) -> 1 | 0;  1 (Odd, 2) -> 0 | 1. Every play through 1 sees 2 infinitely often.
    const ParityGame g = make_game({{1, 0, {1, 0}}, {2, 1, {0, 1}}});
    const Solution s = brute_force_solve(g);
    CHECK(s.winner(0) == Player::Even);
    CHECK(s.winner(1) == Player::Even);
    CHECK(s.strategy(0) == 1);
    CHECK(verify(g, s).ok());
}

TEST_CASE("brute force refuses huge strategy spaces")
{
    const ParityGame g = gen_random_game({GameClass::FullRandom, 40, 0, 0, 1});
    CHECK_THROWS_AS(brute_force_solve(g), TooLarge);
}

TEST_CASE("zielonka matches brute force on small games")
{
    for (const auto& g : pgtest::small_games(500, 3)) {
        const Solution oracle = brute_force_solve(g);
        for (bool optimized : {true, false}) {
            ZielonkaOptions o;
            o.optimized = optimized;
            const Solution s = zielonka_solve(g, VertexSet(g.size(), true), o);
            CHECK(s.same_winners(oracle));
            CHECK(verify(g, s).ok());
        }
    }
}

TEST_CASE("parallel attractor inside zielonka changes nothing")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const ParityGame g = gen_random_game({static_cast<GameClass>(seed % 3), 3000, 0, 0, seed});
        const VertexSet all(g.size(), true);
        const Solution base = zielonka_solve(g, all);
        for (int w : {2, 4, 8}) {
            ZielonkaOptions o;
            o.workers = w;
            const Solution s = zielonka_solve(g, all, o);
            CHECK(s.same_winners(base));
            CHECK(verify(g, s).ok());
        }
    }
}

TEST_CASE("optimized variant skips a recursion when nothing is attracted")
{
    const ParityGame g = gen_random_game({GameClass::LowDegree, 400, 0, 0, 11});
    const VertexSet all(g.size(), true);
    SolveStats plain, opt;
    ZielonkaOptions a, b;
    a.optimized = false;
    a.stats = &plain;
    b.stats = &opt;
    CHECK(zielonka_solve(g, all, a).same_winners(zielonka_solve(g, all, b)));
    CHECK(opt.frames <= plain.frames);
}

TEST_CASE("second recursion only restarts vertices outside the opponent attractor")
{
    const ParityGame g = gen_random_game({GameClass::Steady, 300, 0, 0, 2});
    ZielonkaOptions o;
    o.on_reset = [&](std::span<const int> sub, std::span<const int> attracted, std::span<const int> reset) {
        VertexSet in_sub = VertexSet::of(g.size(), sub);
        VertexSet in_attr = VertexSet::of(g.size(), attracted);
        CHECK_FALSE(attracted.empty());
        for (int v : attracted) CHECK(in_sub.contains(v));
        for (int v : reset) {
            CHECK(in_sub.contains(v));
            CHECK_FALSE(in_attr.contains(v));
        }
    };
    const Solution s = zielonka_solve(g, VertexSet(g.size(), true), o);
    CHECK(verify(g, s).ok());
}

TEST_CASE("extended attractor peels top layers of one parity")
{
    // Priorities 4, 2 for Even, then 1: zielonka_attr for Even covers the first two layers' attractor.
    const ParityGame g = make_game({{4, 0, {1}}, {2, 1, {0, 2}}, {1, 1, {2, 0}}});
    const VertexSet a = zielonka_attr(g, VertexSet(3, true), Player::Even);
    CHECK(a.contains(0));
    CHECK(a.contains(1));
    CHECK_FALSE(a.contains(2));
}
