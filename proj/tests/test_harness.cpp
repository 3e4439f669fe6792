#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pg/benchmark.hpp"
#include "pg/generator.hpp"
#include "support.hpp"

using namespace pg;

namespace {

BenchRecord rec(std::string solver, std::string cls, double s, bool timed_out = false, bool crashed = false)
{
    return {"g", std::move(cls), std::move(solver), s, timed_out, crashed, !timed_out && !crashed};
}

}  // namespace

TEST_CASE("par2 scores finished runs by time and the rest double")
{
    CHECK(par2_score(rec("zlk", "a", 12.5), 900) == 12.5);
    CHECK(par2_score(rec("zlk", "a", 900, true), 900) == 1800);
    CHECK(par2_score(rec("zlk", "a", 3, false, true), 900) == 1800);
    const std::vector<BenchRecord> rs{rec("zlk", "a", 1.5), rec("zlk", "a", 900, true), rec("zlk", "b", 0.25)};
    CHECK(par2_sum(rs, 900) == 1801.75);
    CHECK(par2_sum(rs, 900, 10) == 9001.75);
}

TEST_CASE("par2 table groups by solver and class")
{
    const std::vector<BenchRecord> rs{rec("spm", "x", 2), rec("pp", "x", 1), rec("spm", "x", 900, true),
                                      rec("spm", "y", 4), rec("pp", "y", 0.5)};
    const auto t = par2_table(rs, 900);
    REQUIRE(t.size() == 4);
    CHECK(t[0].solver == "pp");
    CHECK(t[0].cls == "x");
    CHECK(t[2].solver == "spm");
    CHECK(t[2].par2_seconds == 1802);
    CHECK(t[2].timeouts == 1);
    std::ostringstream os;
    write_par2_csv(os, t);
    CHECK(os.str().rfind("solver,class,par2_seconds,timeouts\npp,x,1.000000,0\n", 0) == 0);
}

TEST_CASE("cactus rows rank finished runs per solver")
{
    const std::vector<BenchRecord> rs{rec("a", "c", 3), rec("a", "c", 1), rec("a", "c", 9, true), rec("b", "c", 2)};
    const auto rows = cactus_rows(rs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].solver == "a");
    CHECK(rows[0].rank == 1);
    CHECK(rows[0].seconds == 1);
    CHECK(rows[1].rank == 2);
    CHECK(rows[1].seconds == 3);
    CHECK(rows[2].solver == "b");
    std::ostringstream os;
    write_cactus_csv(os, rows);
    CHECK(os.str() == "solver,rank,seconds\na,1,1.000000\na,2,3.000000\nb,1,2.000000\n");
}

TEST_CASE("isolated runs finish, time out or crash")
{
    BenchOptions o;
    o.timeout = 30;
    const BenchGame small{"small", "steady", gen_random_game({GameClass::Steady, 200, 0, 0, 1})};
    const BenchRecord ok = run_isolated(small, "zlk", o);
    CHECK_FALSE(ok.timed_out);
    CHECK_FALSE(ok.crashed);
    CHECK(ok.verified);
    CHECK(ok.seconds < 30);

    // Unknown solver names throw inside the child, which then exits without a report.
    const BenchRecord bad = run_isolated(small, "nope", o);
    CHECK(bad.crashed);
    CHECK(par2_score(bad, o.timeout) == 60);

    o.timeout = 0.05;
    o.pipeline.preprocess = {false, false, false};
    const BenchGame hard{"hard", "fullrandom", gen_random_game({GameClass::FullRandom, 3000, 0, 0, 2})};
    const BenchRecord slow = run_isolated(hard, "spm", o);
    CHECK(slow.timed_out);
    CHECK(slow.seconds == doctest::Approx(0.05));

    CHECK(ok.winners.empty());
    CHECK_THROWS_AS(run_isolated(small, "zlk", BenchOptions{{}, 0}), std::invalid_argument);
}

TEST_CASE("isolated runs can report the winner map")
{
    BenchOptions o;
    o.timeout = 30;
    o.collect_winners = true;
    const BenchGame g{"g", "lowdeg", gen_random_game({GameClass::LowDegree, 300, 0, 0, 6})};
    const BenchRecord a = run_isolated(g, "zlk", o);
    const BenchRecord b = run_isolated(g, "qpt", o);
    const Solution s = solve(g.game);
    REQUIRE(a.winners.size() == 300);
    CHECK(a.winners == b.winners);
    for (int v = 0; v < 300; ++v) CHECK(a.winners[v] == static_cast<std::int8_t>(s.winner(v)));
}

TEST_CASE("benchmark runs every solver on every game")
{
    BenchOptions o;
    o.timeout = 30;
    o.solvers = {"zlk", "pp", "spm"};
    int calls = 0;
    o.progress = [&](const BenchRecord&) { ++calls; };
    std::vector<BenchGame> games;
    for (std::uint64_t s = 0; s < 3; ++s)
        games.push_back({"g" + std::to_string(s), "lowdeg", gen_random_game({GameClass::LowDegree, 100, 0, 0, s})});
    const auto rs = run_benchmark(games, o);
    CHECK(rs.size() == 9);
    CHECK(calls == 9);
    for (const auto& r : rs) CHECK(r.verified);
    std::ostringstream os;
    write_records_csv(os, rs);
    CHECK(os.str().rfind("game,class,solver,seconds,timed_out,crashed,verified\ng0,lowdeg,zlk,", 0) == 0);
}
