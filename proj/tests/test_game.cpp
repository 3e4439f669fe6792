#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pg/generator.hpp"
#include "pg/pgsolver_io.hpp"
#include "pg/transform.hpp"
#include "support.hpp"

using namespace pg;
using pgtest::make_game;

TEST_CASE("csr adjacency and predecessors")
{
    const ParityGame g = make_game({{0, 0, {1, 2}}, {3, 1, {0}}, {2, 0, {2, 0}}});
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 5);
    CHECK(g.max_priority() == 3);
    CHECK_FALSE(g.sorted_by_priority());
    CHECK(g.has_edge(2, 2));
    CHECK_FALSE(g.has_edge(1, 2));
    auto pred0 = g.predecessors(0);
    CHECK(std::vector<int>(pred0.begin(), pred0.end()) == std::vector<int>{1, 2});
    CHECK(g.out_degree(0) == 2);
}

TEST_CASE("construction rejects dead ends and bad ids")
{
    CHECK_THROWS_AS(make_game({{0, 0, {}}}), GameError);
    CHECK_THROWS_AS(make_game({{0, 0, {1}}}), GameError);
    CHECK_THROWS_AS(make_game({{-1, 0, {0}}}), GameError);
}

TEST_CASE("vertex set bookkeeping")
{
    VertexSet s(5);
    s.insert(1);
    s.insert(3);
    s.insert(3);
    CHECK(s.size() == 2);
    s.erase(1);
    CHECK(s.to_vector() == std::vector<int>{3});
    CHECK(s.subset_of(VertexSet(5, true)));
    CHECK_FALSE(VertexSet(5, true).subset_of(s));
}

TEST_CASE("pgsolver round trip keeps labels and ids")
{
    const std::string text = "parity 3;\n0 2 0 1,2 \"a\";\n1 1 1 0;\n2 4 0 2;\n";
    const ParityGame g = parse_pgsolver(text);
    CHECK(g.size() == 3);
    CHECK(g.priority(2) == 4);
    CHECK(g.owner(1) == Player::Odd);
    REQUIRE(g.label(0).has_value());
    CHECK(*g.label(0) == "a");
    CHECK(parse_pgsolver(write_pgsolver(g)) == g);
}

TEST_CASE("pgsolver input with sparse ids is renamed")
{
    const PgsolverInput in = read_pgsolver("parity 20;\n7 1 0 20;\n20 2 1 7;\n");
    CHECK(in.renamed);
    CHECK(in.game.size() == 2);
    CHECK(in.original_ids == std::vector<std::int64_t>{7, 20});
    CHECK(in.game.has_edge(0, 1));
}

TEST_CASE("pgsolver syntax errors carry a line")
{
    try {
        parse_pgsolver("parity 1;\n0 x 0 0;\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("solution text round trip")
{
    Solution s(3);
    s.set(0, Player::Even, 1);
    s.set(1, Player::Odd);
    s.set(2, Player::Even, 2);
    const Solution r = read_solution(write_solution(s), 3);
    CHECK(r.same_winners(s));
    CHECK(r.strategy(0) == 1);
    CHECK(r.strategy(2) == 2);
}

TEST_CASE("normalize removes priority gaps and sorts")
{
    const ParityGame g = make_game({{7, 0, {1}}, {2, 1, {0}}, {4, 0, {0}}});
    const RenamedGame r = normalize(g);
    CHECK(r.game.sorted_by_priority());
    CHECK(r.game.max_priority() == 3);
    for (int v = 0; v < g.size(); ++v) {
        CHECK(r.to_old[r.to_new[v]] == v);
        CHECK(parity(r.game.priority(r.to_new[v])) == parity(g.priority(v)));
    }
}

TEST_CASE("compress and inflate keep parity and order")
{
    const ParityGame g = make_game({{0, 0, {1}}, {2, 0, {2}}, {3, 1, {0}}, {5, 1, {0}}, {5, 0, {1}}});
    const ParityGame c = compress_priorities(g);
    CHECK(c.priority(0) == c.priority(1));
    CHECK(c.priority(2) == c.priority(3));
    const ParityGame i = inflate_priorities(g);
    for (int v = 0; v < g.size(); ++v) CHECK(parity(i.priority(v)) == parity(g.priority(v)));
    CHECK(i.priority(3) != i.priority(4));
    CHECK(i.priority(2) < i.priority(3));
}

TEST_CASE("generator classes respect their degree bounds and are reproducible")
{
    for (auto cls : {GameClass::LowDegree, GameClass::FullRandom, GameClass::Steady}) {
        const GenSpec spec{cls, 60, 0, 0, 9};
        const ParityGame g = gen_random_game(spec);
        const auto [lo, hi] = degree_bounds(spec);
        for (int v = 0; v < g.size(); ++v) {
            CHECK(g.out_degree(v) >= lo);
            CHECK(g.out_degree(v) <= hi);
            CHECK_FALSE(g.has_edge(v, v));
            CHECK(g.priority(v) < 60);
        }
        CHECK(gen_random_game(spec) == g);
    }
    CHECK_THROWS_AS(gen_random_game({GameClass::LowDegree, 1, 0, 0, 0}), std::invalid_argument);
}
