#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pg/attractor.hpp"
#include "pg/generator.hpp"
#include "pg/scc.hpp"
#include "support.hpp"

using namespace pg;

namespace {

VertexSet random_target(const ParityGame& g, Rng& rng)
{
    VertexSet t(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (rng.below(8) == 0) t.insert(v);
    if (t.empty()) t.insert(0);
    return t;
}

/// Checks that every attracted alpha vertex points into the set.
void check_strategy(const ParityGame& g, Player alpha, const VertexSet& target, const AttractorResult& r)
{
    r.set.for_each([&](int v) {
        if (target.contains(v) || g.owner(v) != alpha) return;
        REQUIRE(r.strategy[v] >= 0);
        CHECK(g.has_edge(v, r.strategy[v]));
        CHECK(r.set.contains(r.strategy[v]));
    });
}

}  // namespace

TEST_CASE("attractor on a hand-built game")
{
    // 0 (Even) -> 1 | 2;  1 (Odd) -> 2 | 3;  2 target;  3 (Odd) -> 3
    const ParityGame g = pgtest::make_game({{0, 0, {1, 2}}, {0, 1, {2, 3}}, {0, 0, {2}}, {0, 1, {3}}});
    const VertexSet all(4, true);
    const auto r = attractor(g, all, Player::Even, VertexSet::of(4, std::vector<int>{2}));
    CHECK(r.set.to_vector() == std::vector<int>{0, 2});
    CHECK(r.strategy[0] == 2);
    const auto o = attractor(g, all, Player::Odd, VertexSet::of(4, std::vector<int>{3}));
    CHECK(o.set.to_vector() == std::vector<int>{1, 3});
}

TEST_CASE("attractor respects the subgame")
{
    const ParityGame g = pgtest::make_game({{0, 1, {1, 2}}, {0, 0, {1}}, {0, 0, {2}}});
    VertexSet sub(3, true);
    sub.erase(2);
    const auto r = attractor(g, sub, Player::Even, VertexSet::of(3, std::vector<int>{1}));
    CHECK(r.set.to_vector() == std::vector<int>{0, 1});
}

TEST_CASE("serial and parallel attractors equal the textbook fixpoint")
{
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto cls = static_cast<GameClass>(i % 3);
        const ParityGame g = gen_random_game({cls, 300, 0, 0, static_cast<std::uint64_t>(i)});
        // The complement of an attractor is a total subgame.
        VertexSet sub(g.size(), true);
        const VertexSet cut = pgtest::naive_attractor(g, sub, Player::Odd, VertexSet::of(g.size(), std::vector<int>{0}));
        cut.for_each([&](int v) { sub.erase(v); });
        if (sub.empty()) continue;
        VertexSet target = random_target(g, rng);
        for (int v = 0; v < g.size(); ++v)
            if (!sub.contains(v)) target.erase(v);
        for (Player alpha : {Player::Even, Player::Odd}) {
            const VertexSet expect = pgtest::naive_attractor(g, sub, alpha, target);
            const auto s = attractor(g, sub, alpha, target);
            CHECK(s.set == expect);
            check_strategy(g, alpha, target, s);
            for (int w : {1, 2, 4, 8}) {
                const auto p = parallel_attractor(g, sub, alpha, target, w);
                CHECK(p.set == expect);
                check_strategy(g, alpha, target, p);
            }
        }
    }
}

TEST_CASE("single worker parallel attractor is deterministic")
{
    const ParityGame g = gen_random_game({GameClass::Steady, 2000, 0, 0, 3});
    Rng rng(1);
    const VertexSet target = random_target(g, rng);
    const VertexSet all(g.size(), true);
    const auto a = parallel_attractor(g, all, Player::Odd, target, 1);
    const auto b = parallel_attractor(g, all, Player::Odd, target, 1);
    CHECK(a.set == b.set);
    CHECK(a.strategy == b.strategy);
}

TEST_CASE("scc finder reports sinks first")
{
    // 0 <-> 1 -> 2 <-> 3, 4 -> 4
    const ParityGame g = pgtest::make_game({{0, 0, {1}}, {0, 0, {0, 2}}, {0, 0, {3}}, {0, 0, {2}}, {0, 0, {4}}});
    SccFinder f(g.size());
    std::vector<std::vector<int>> comps;
    const std::vector<int> roots{0, 4};
    f.run(
        roots, [](int) { return true; }, [&](int v) { return g.successors(v); },
        [&](std::span<const int> c) {
            std::vector<int> sorted(c.begin(), c.end());
            std::sort(sorted.begin(), sorted.end());
            comps.push_back(sorted);
            return false;
        });
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{2, 3});
    CHECK(comps[1] == std::vector<int>{0, 1});
    CHECK(comps[2] == std::vector<int>{4});
    auto succ = [&](int v) { return g.successors(v); };
    CHECK(nontrivial(std::span<const int>(comps[2]), succ));
}
