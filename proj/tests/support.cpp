#include "support.hpp"

#include "pg/generator.hpp"
#include "pg/solvers.hpp"

namespace pgtest {

pg::ParityGame make_game(const Spec& spec)
{
    std::vector<pg::VertexData> data;
    for (const auto& [prio, owner, succ] : spec)
        data.push_back({prio, owner ? pg::Player::Odd : pg::Player::Even, succ, std::nullopt});
    return pg::ParityGame(std::move(data));
}

std::vector<pg::ParityGame> small_games(int count, std::uint64_t seed, int max_n)
{
    static const pg::GameClass classes[] = {pg::GameClass::LowDegree, pg::GameClass::FullRandom,
                                            pg::GameClass::Steady};
    pg::Rng rng(seed);
    std::vector<pg::ParityGame> out;
    for (int i = 0; i < count; ++i) {
        const int n = rng.range(2, max_n);
        out.push_back(pg::gen_random_game({classes[i % 3], n, 0, 0, rng.below(1ull << 62)}));
    }
    return out;
}

pg::Solution raw_solve(const std::string& solver, const pg::ParityGame& g)
{
    return pg::make_solver(solver)(g, pg::VertexSet(g.size(), true));
}

pg::VertexSet naive_attractor(const pg::ParityGame& g, const pg::VertexSet& sub, pg::Player alpha,
                              const pg::VertexSet& target)
{
    pg::VertexSet a = target;
    for (bool changed = true; changed;) {
        changed = false;
        sub.for_each([&](int v) {
            if (a.contains(v)) return;
            bool any = false, all = true;
            for (int w : g.successors(v)) {
                if (!sub.contains(w)) continue;
                if (a.contains(w)) any = true;
                else all = false;
            }
            if (g.owner(v) == alpha ? any : all) {
                a.insert(v);
                changed = true;
            }
        });
    }
    return a;
}

std::vector<std::string> solvers()
{
    return {pg::solver_names().begin(), pg::solver_names().end()};
}

}  // namespace pgtest
