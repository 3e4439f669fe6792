#include "pg/preprocess.hpp"

#include <algorithm>

#include "pg/attractor.hpp"
#include "pg/scc.hpp"

namespace pg {

namespace {

// Adds Attr_alpha(targets) inside rem to sol and removes it from rem.
// choice[v] is the strategy of target v when alpha owns it.
int absorb(const ParityGame& g, VertexSet& rem, Solution& sol, Player alpha, const VertexSet& targets,
           const std::vector<int>& choice)
{
    if (targets.empty()) return 0;
    const AttractorResult a = attractor(g, rem, alpha, targets);
    int solved = 0;
    a.set.for_each([&](int v) {
        int s = -1;
        if (g.owner(v) == alpha) s = targets.contains(v) ? choice[v] : a.strategy[v];
        sol.set(v, alpha, s);
        rem.erase(v);
        ++solved;
    });
    return solved;
}

PreprocessResult start(const ParityGame& g, const VertexSet& remaining)
{
    return {Solution(g.size()), remaining, {}, {}};
}

}  // namespace

PreprocessResult solve_self_loops(const ParityGame& g, const VertexSet& remaining)
{
    PreprocessResult r = start(g, remaining);
    const int n = g.size();
    VertexSet win[2] = {VertexSet(n), VertexSet(n)};
    std::vector<int> choice(static_cast<std::size_t>(n), -1);

    remaining.for_each([&](int v) {
        if (!g.has_edge(v, v)) return;
        const Player side = parity(g.priority(v));
        if (side == g.owner(v)) {
            win[index(side)].insert(v);
            choice[v] = v;
            return;
        }
        const bool other = std::any_of(g.successors(v).begin(), g.successors(v).end(),
                                       [&](int w) { return w != v && remaining.contains(w); });
        if (other) r.dropped_loops.push_back(v);
        else win[index(side)].insert(v);
    });

    for (Player p : {Player::Even, Player::Odd}) {
        win[index(p)].for_each([&](int v) {
            if (!r.remaining.contains(v)) win[index(p)].erase(v);
        });
        r.stats.self_loops += absorb(g, r.remaining, r.solved, p, win[index(p)], choice);
    }
    std::erase_if(r.dropped_loops, [&](int v) { return !r.remaining.contains(v); });
    r.stats.dropped_loops = static_cast<int>(r.dropped_loops.size());
    return r;
}

PreprocessResult solve_winner_controlled_cycles(const ParityGame& g, const VertexSet& remaining)
{
    PreprocessResult r = start(g, remaining);
    const int n = g.size();
    SccFinder scc(n);
    std::vector<int> choice(static_cast<std::size_t>(n), -1);

    for (Player p : {Player::Even, Player::Odd}) {
        auto in_h = [&](int v) {
            return r.remaining.contains(v) && g.owner(v) == p && parity(g.priority(v)) == p;
        };
        std::vector<int> roots;
        r.remaining.for_each([&](int v) {
            if (in_h(v)) roots.push_back(v);
        });
        VertexSet targets(n);
        std::vector<char> comp(static_cast<std::size_t>(n), 0);
        auto succ = [&](int v) { return g.successors(v); };
        scc.run(roots, in_h, succ, [&](std::span<const int> c) {
            if (!nontrivial(c, succ)) return false;
            for (int v : c) comp[v] = 1;
            for (int v : c) {
                // Any successor inside the component keeps the play on winning cycles.
                for (int w : g.successors(v))
                    if (comp[w]) {
                        choice[v] = w;
                        break;
                    }
                targets.insert(v);
            }
            for (int v : c) comp[v] = 0;
            return false;
        });
        r.stats.wcwc += absorb(g, r.remaining, r.solved, p, targets, choice);
    }
    return r;
}

PreprocessResult solve_single_parity(const ParityGame& g, const VertexSet& remaining)
{
    PreprocessResult r = start(g, remaining);
    bool seen[2] = {false, false};
    remaining.for_each([&](int v) { seen[index(parity(g.priority(v)))] = true; });
    if (seen[0] == seen[1]) return r;
    const Player p = seen[0] ? Player::Even : Player::Odd;
    remaining.for_each([&](int v) {
        int s = -1;
        if (g.owner(v) == p)
            for (int w : g.successors(v))
                if (remaining.contains(w)) {
                    s = w;
                    break;
                }
        r.solved.set(v, p, s);
    });
    r.stats.single_parity = remaining.size();
    r.remaining.clear();
    return r;
}

PreprocessResult preprocess(const ParityGame& g, const VertexSet& remaining, const PreprocessOptions& opts)
{
    PreprocessResult total = start(g, remaining);
    std::vector<char> dropped(static_cast<std::size_t>(g.size()), 0);
    auto fold = [&](const PreprocessResult& step) {
        total.solved.merge(step.solved);
        total.remaining = step.remaining;
        total.stats.self_loops += step.stats.self_loops;
        total.stats.wcwc += step.stats.wcwc;
        total.stats.single_parity += step.stats.single_parity;
        for (int v : step.dropped_loops) dropped[v] = 1;
        return step.remaining.size();
    };

    for (;;) {
        const int before = total.remaining.size();
        if (opts.self_loops && !total.remaining.empty()) fold(solve_self_loops(g, total.remaining));
        if (opts.wcwc && !total.remaining.empty()) fold(solve_winner_controlled_cycles(g, total.remaining));
        if (opts.single_parity && !total.remaining.empty()) fold(solve_single_parity(g, total.remaining));
        if (total.remaining.size() == before) break;
    }
    for (int v = 0; v < g.size(); ++v)
        if (dropped[v] && total.remaining.contains(v)) total.dropped_loops.push_back(v);
    total.stats.dropped_loops = static_cast<int>(total.dropped_loops.size());
    return total;
}

ParityGame drop_self_loops(const ParityGame& game, std::span<const int> vertices)
{
    std::vector<VertexData> data = game.vertex_data();
    for (int v : vertices) {
        auto& s = data[v].successors;
        std::erase(s, v);
        if (s.empty()) throw GameError("vertex " + std::to_string(v) + " has only its self-loop");
    }
    return ParityGame(std::move(data));
}

Solution scc_solve(const ParityGame& g, const VertexSet& subgame, const SubgameSolver& solver)
{
    const int n = g.size();
    Solution sol(n);
    VertexSet rem = subgame;
    SccFinder scc(n);
    std::vector<int> roots = subgame.to_vector();
    auto in_sub = [&](int v) { return subgame.contains(v); };
    auto succ = [&](int v) { return g.successors(v); };

    // Components arrive sinks first, so every edge out of a component leads
    // to one that is already solved.
    scc.run(roots, in_sub, succ, [&](std::span<const int> c) {
        VertexSet part(n);
        for (int v : c)
            if (rem.contains(v)) part.insert(v);
        if (part.empty()) return false;
        const Solution local = solver(g, part);
        VertexSet won[2] = {VertexSet(n), VertexSet(n)};
        std::vector<int> choice(static_cast<std::size_t>(n), -1);
        part.for_each([&](int v) {
            won[index(local.winner(v))].insert(v);
            choice[v] = local.strategy(v);
        });
        for (Player p : {Player::Even, Player::Odd}) absorb(g, rem, sol, p, won[index(p)], choice);
        return rem.empty();
    });
    return sol;
}

}  // namespace pg
