#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pg/brute_force.hpp"
#include "pg/generator.hpp"
#include "pg/qpt.hpp"
#include "pg/spm.hpp"
#include "pg/verifier.hpp"
#include "support.hpp"

using namespace pg;

namespace {
constexpr int B = QptOps::kBottom;
}

TEST_CASE("stretch decoding")
{
    const QptMeasure m{false, {2, 2, 4, B, 5, B, 6, B}};
    CHECK(qpt_stretches(m) == std::vector<std::uint64_t>{1, 2, 4, 16, 64});
    CHECK(qpt_stretches(QptMeasure{false, {B, B}}).empty());
}

TEST_CASE("tuple width")
{
    CHECK(qpt_width(0) == 0);
    CHECK(qpt_width(1) == 1);
    CHECK(qpt_width(3) == 2);
    CHECK(qpt_width(4) == 3);
    CHECK(qpt_width(1000) == 10);
}

TEST_CASE("order: bottom least, top greatest")
{
    const QptMeasure bottom{false, {B, B, B}};
    const QptMeasure top{true, {}};
    for (const QptMeasure& m : {QptMeasure{false, {2, B, B}}, QptMeasure{false, {B, B, 1}},
                                QptMeasure{false, {0, 0, 0}}}) {
        CHECK(qpt_compare(m, top) < 0);
        CHECK(qpt_compare(top, m) > 0);
        CHECK(qpt_compare(m, m) == 0);
    }
    CHECK(qpt_compare(bottom, QptMeasure{false, {2, B, B}}) < 0);
    CHECK(qpt_compare(top, top) == 0);
    // A longer stretch with an even first dominator beats a shorter one.
    CHECK(qpt_compare(QptMeasure{false, {B, 2, B}}, QptMeasure{false, {2, B, B}}) > 0);
}

TEST_CASE("repeated prog at an even priority climbs strictly to top")
{
    const QptOps ops(Player::Even, 2, 2);
    std::vector<int> m(2), next(2);
    ops.bottom(m);
    int steps = 0;
    for (;;) {
        const bool top = ops.prog(m, 2, next);
        ++steps;
        if (top) break;
        CHECK(ops.compare(next, m) > 0);
        m = next;
        REQUIRE(steps < 64);
    }
    CHECK(steps >= 2);
}

TEST_CASE("odd priority prog never reaches top from bottom")
{
    const QptOps ops(Player::Even, 3, 5);
    std::vector<int> m(3), out(3);
    ops.bottom(m);
    CHECK_FALSE(ops.prog(m, 5, out));
    CHECK_FALSE(ops.prog(m, 1, out));
}

TEST_CASE("matches brute force with and without the shortcuts")
{
    const auto games = pgtest::small_games(400, 77);
    for (int mask = 0; mask < 8; ++mask) {
        LiftingOptions o;
        o.attractor_check = mask & 1;
        o.early_strategies = mask & 2;
        o.shuffle = mask & 4;
        o.seed = 5;
        for (const auto& g : games) {
            const Solution s = qpt_solve(g, VertexSet(g.size(), true), o);
            CHECK(s.same_winners(brute_force_solve(g)));
            CHECK(verify(g, s).ok());
        }
    }
}

TEST_CASE("agrees with small progress measures up to 50 vertices")
{
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        const int n = rng.range(2, 50);
        const ParityGame g = gen_random_game({static_cast<GameClass>(i % 3), n, 0, 0, rng.below(1u << 30)});
        const VertexSet all(g.size(), true);
        const Solution q = qpt_solve(g, all);
        LiftingOptions plain;
        plain.early_strategies = false;
        CHECK(q.same_winners(spm_solve(g, all)));
        CHECK(q.same_winners(qpt_solve(g, all, plain)));
        CHECK(verify(g, q).ok());
    }
}
